// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace timeomni {

/// Base of every error raised by the library. `kind()` is a stable short tag
/// used by the evaluator to classify per-instance failures.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

class ShapeMismatch : public Error {
public:
    explicit ShapeMismatch(const std::string& what) : Error("ShapeMismatch", "shape mismatch: " + what) {}
};

class NonFiniteGradient : public Error {
public:
    explicit NonFiniteGradient(const std::string& what)
        : Error("NonFiniteGradient", "non-finite gradient: " + what) {}
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& reason)
        : Error("ParseError", "line " + std::to_string(line) + ": " + reason), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class SchemaError : public Error {
public:
    explicit SchemaError(std::string field, const std::string& detail = {})
        : Error("SchemaError", "schema error in field '" + field + "'" + (detail.empty() ? "" : ": " + detail)),
          field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

class SidecarMissing : public Error {
public:
    explicit SidecarMissing(const std::string& path) : Error("SidecarMissing", "sidecar missing: " + path) {}
};

class NonFiniteValue : public Error {
public:
    explicit NonFiniteValue(const std::string& id)
        : Error("NonFiniteValue", "non-finite value in instance '" + id + "'"), id_(id) {}
    const std::string& id() const noexcept { return id_; }

private:
    std::string id_;
};

class SignalTooLong : public Error {
public:
    SignalTooLong(std::size_t length, std::size_t limit)
        : Error("SignalTooLong", "signal length " + std::to_string(length) + " exceeds router limit " +
                                     std::to_string(limit)) {}
};

class ContextOverflow : public Error {
public:
    ContextOverflow(std::size_t length, std::size_t limit)
        : Error("ContextOverflow", "sequence length " + std::to_string(length) + " exceeds max_positions " +
                                       std::to_string(limit)) {}
};

class LengthUnsupported : public Error {
public:
    LengthUnsupported(std::size_t required, std::size_t max_length)
        : Error("LengthUnsupported", "required output length " + std::to_string(required) +
                                         " exceeds largest regression head " + std::to_string(max_length)) {}
};

class InvalidUtf8 : public Error {
public:
    explicit InvalidUtf8(std::size_t offset)
        : Error("InvalidUtf8", "invalid UTF-8 at byte " + std::to_string(offset)) {}
};

class TooManyChannels : public Error {
public:
    TooManyChannels(std::size_t in, std::size_t out)
        : Error("TooManyChannels", "unsupported channel mapping " + std::to_string(in) + " -> " +
                                       std::to_string(out)) {}
};

class LengthMismatch : public Error {
public:
    LengthMismatch(std::size_t a, std::size_t b)
        : Error("LengthMismatch", "length mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

class EmptyInput : public Error {
public:
    explicit EmptyInput(const std::string& what) : Error("EmptyInput", "empty input: " + what) {}
};

class NonFiniteLoss : public Error {
public:
    NonFiniteLoss(std::size_t step, std::size_t last_good)
        : Error("NonFiniteLoss", "non-finite loss at step " + std::to_string(step) + " (last good step " +
                                     std::to_string(last_good) + ")"),
          step_(step), last_good_(last_good) {}
    std::size_t step() const noexcept { return step_; }
    std::size_t last_good_step() const noexcept { return last_good_; }

private:
    std::size_t step_;
    std::size_t last_good_;
};

class ConfigError : public Error {
public:
    ConfigError(std::string field, const std::string& detail)
        : Error("ConfigError", "config field '" + field + "': " + detail), field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

class CheckpointError : public Error {
public:
    explicit CheckpointError(const std::string& what) : Error("CheckpointError", "checkpoint: " + what) {}
};

class EmptyMask : public Error {
public:
    EmptyMask() : Error("EmptyMask", "loss mask selects no positions") {}
};

class Undefined : public Error {
public:
    explicit Undefined(const std::string& what) : Error("Undefined", "undefined: " + what) {}
};

class AllFailed : public Error {
public:
    explicit AllFailed(const std::string& what) : Error("AllFailed", "all instances failed: " + what) {}
};

class NoTasks : public Error {
public:
    NoTasks() : Error("NoTasks", "no tasks to report") {}
};

class UnknownInstanceId : public Error {
public:
    explicit UnknownInstanceId(const std::string& id) : Error("UnknownInstanceId", "unknown instance id: " + id) {}
};

}  // namespace timeomni
