// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "timeomni/dataset.hpp"

namespace timeomni {

/// Terms with |target| below this are left out of MAPE.
inline constexpr double kMapeZeroGuard = 1e-12;

enum class FailureReason { TLS, TMC, INF, OTHER };
std::string_view to_string(FailureReason r) noexcept;
FailureReason parse_failure_reason(std::string_view s);

struct Success {
    Target prediction;
    friend bool operator==(const Success&, const Success&) = default;
};
struct Failure {
    FailureReason reason = FailureReason::OTHER;
    std::string detail;
    friend bool operator==(const Failure&, const Failure&) = default;
};

struct PredictionRecord {
    std::string instance_id;
    std::string task_id;
    std::variant<Success, Failure> outcome;

    bool ok() const { return std::holds_alternative<Success>(outcome); }
    friend bool operator==(const PredictionRecord&, const PredictionRecord&) = default;
};

// ---- scalar metrics -----------------------------------------------------------------

/// Trimmed, ASCII case-folded.
std::string normalize_label(std::string_view s);

double accuracy(std::span<const std::string> preds, std::span<const std::string> targets);

/// Positive-class F1 when `positive` is set, otherwise macro F1 over `classes`.
/// Classes with neither support nor predictions do not enter the macro mean.
double f1(std::span<const std::string> preds, std::span<const std::string> targets,
          std::span<const std::string> classes, std::optional<std::string> positive = std::nullopt);

double mae(std::span<const double> pred, std::span<const double> target);

/// Sum of |(y - yhat) / y| over usable positions plus the counts.
struct MapeTerms {
    double sum = 0.0;
    std::size_t used = 0;
    std::size_t excluded = 0;

    MapeTerms& operator+=(const MapeTerms& o);
    /// Percentage; throws Undefined when nothing is usable.
    double value() const;
};
MapeTerms mape_terms(std::span<const double> pred, std::span<const double> target);
/// Percentage. Throws LengthMismatch, or Undefined when every target is ~0.
double mape(std::span<const double> pred, std::span<const double> target);

double success_rate(std::size_t n_success, std::size_t n_total);
double success_rate(std::span<const PredictionRecord> records);
/// mape / sr. Throws AllFailed when sr == 0.
double swmape(double mape_value, double sr);

// ---- ranking ---------------------------------------------------------------------------

/// scores[task][model]; nullopt means the model failed the task.
struct RankTable {
    std::vector<std::string> models;
    std::vector<std::string> tasks;
    std::vector<std::vector<double>> ranks;  // [task][model]
    std::vector<double> avg_rank;             // [model]
};

/// Fractional ranks per task (1 = best, ties share the mean position);
/// failing models share the mean of the positions after every scoring model.
/// Throws NoTasks when `tasks` is empty.
RankTable avg_rank(const std::vector<std::string>& models, const std::vector<std::string>& tasks,
                   const std::vector<std::vector<std::optional<double>>>& scores, const std::vector<bool>& higher_better);

// ---- per-task scoring ------------------------------------------------------------------

struct TaskScore {
    std::string task_id;
    TaskType task_type = TaskType::Classification;
    std::string discipline;
    std::map<std::string, double> metrics;  // accuracy, f1, mae, mape, success_rate, swmape
    std::size_t n_total = 0;
    std::size_t n_success = 0;
    std::size_t mape_excluded = 0;
    std::map<std::string, std::size_t> failures;  // reason -> count

    bool completed() const { return n_success > 0; }
    /// f1 slot (accuracy for MCQ) for understanding, swmape for generation; nullopt if absent.
    std::optional<double> rank_score() const;
    friend bool operator==(const TaskScore&, const TaskScore&) = default;
};

/// Scores one task. `instances` and `records` are matched by id.
/// Understanding failures count as wrong answers; generation metrics pool the
/// points of successful instances.
TaskScore score_task(const std::string& task_id, std::span<const TaskInstance* const> instances,
                     std::span<const PredictionRecord> records);

/// Text of an understanding prediction or target.
std::string label_of(const Target& t);

}  // namespace timeomni
