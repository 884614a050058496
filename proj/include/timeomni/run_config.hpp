// SPDX-License-Identifier: Apache-2.0
#pragma once

// Run configuration: an INI-style file with [model], [train], [data] and
// [eval] sections plus a top-level seed. Comments start with ';' or '#'.
// Relative paths resolve against the directory holding the file.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "timeomni/model.hpp"
#include "timeomni/training.hpp"

namespace timeomni {

struct RunConfig {
    std::uint64_t seed = 0;
    ModelConfig model;
    TrainConfig train;
    std::optional<std::filesystem::path> train_data;  // [data] train
    std::optional<std::filesystem::path> eval_data;   // [data] eval
    std::filesystem::path out = ".";                 // [run] out, artifact directory
    std::string model_name = "timeomni";             // [eval] name
    std::string text;                                // the file, verbatim
};

/// Parses and validates. Throws ConfigError naming the offending field.
RunConfig parse_run_config(const std::string& text, const std::filesystem::path& base_dir = ".");
RunConfig load_run_config(const std::filesystem::path& path);

/// Model + adapter reconstruction from a config and a saved training checkpoint.
Model load_trained_model(const Checkpoint& ckpt, const RunConfig& cfg);

}  // namespace timeomni
