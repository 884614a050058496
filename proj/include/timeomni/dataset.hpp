// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace timeomni {

/// Largest accepted channels * length of one series.
inline constexpr std::size_t kMaxSeriesElements = std::size_t{1} << 25;
/// Series with more points than this are written to a binary sidecar.
inline constexpr std::size_t kInlineSeriesLimit = 4096;
/// Guard applied to the standard deviation of constant signals.
inline constexpr double kNormEpsilon = 1e-8;

enum class TaskType { AnomalyDetection, Classification, MCQ, EventLocalisation, Forecasting, Imputation, Synthesis };

inline constexpr TaskType kAllTaskTypes[] = {TaskType::AnomalyDetection, TaskType::Classification,
                                             TaskType::MCQ,              TaskType::EventLocalisation,
                                             TaskType::Forecasting,      TaskType::Imputation,
                                             TaskType::Synthesis};

/// Understanding tasks answer in text; the rest produce series or indices.
bool is_understanding(TaskType t) noexcept;
std::string_view to_string(TaskType t) noexcept;
TaskType parse_task_type(std::string_view s);

/// Multichannel signal stored channel-major: all of channel 0, then channel 1, ...
struct TimeSeries {
    std::size_t channels = 0;
    std::size_t length = 0;
    std::vector<double> values;
    std::optional<double> sample_rate_hz;
    std::vector<std::string> channel_names;

    static TimeSeries from_channels(const std::vector<std::vector<double>>& rows);
    static TimeSeries univariate(std::vector<double> v);

    std::span<const double> channel(std::size_t c) const {
        return std::span<const double>(values).subspan(c * length, length);
    }
    double at(std::size_t c, std::size_t t) const { return values[c * length + t]; }

    friend bool operator==(const TimeSeries&, const TimeSeries&) = default;
};

struct TextLabel {
    std::string text;
    friend bool operator==(const TextLabel&, const TextLabel&) = default;
};
struct McqChoice {
    char choice = 'A';  // one of A-D
    friend bool operator==(const McqChoice&, const McqChoice&) = default;
};
struct SeriesTarget {
    TimeSeries series;
    friend bool operator==(const SeriesTarget&, const SeriesTarget&) = default;
};
struct IndicesTarget {
    std::vector<std::size_t> indices;
    friend bool operator==(const IndicesTarget&, const IndicesTarget&) = default;
};

using Target = std::variant<TextLabel, McqChoice, SeriesTarget, IndicesTarget>;

struct NormStats {
    double mean = 0.0;
    double scale = 1.0;  // std, already guarded by kNormEpsilon
    friend bool operator==(const NormStats&, const NormStats&) = default;
};

struct TaskInstance {
    std::string id;
    std::string discipline;
    std::string task_id;
    TaskType task_type = TaskType::Classification;
    std::string prompt;
    std::optional<TimeSeries> input;  // absent only for Synthesis
    Target target;
    std::optional<NormStats> norm_stats;

    friend bool operator==(const TaskInstance&, const TaskInstance&) = default;
};

struct ManifestEntry {
    std::size_t count = 0;
    TaskType task_type = TaskType::Classification;
    friend bool operator==(const ManifestEntry&, const ManifestEntry&) = default;
};

/// Ordered instances plus a task_id -> (count, type) manifest. Built through
/// make_dataset so the invariants hold; treat as immutable afterwards.
struct Dataset {
    std::vector<TaskInstance> instances;
    std::map<std::string, ManifestEntry> manifest;

    const TaskInstance* find(const std::string& id) const;
    friend bool operator==(const Dataset&, const Dataset&) = default;
};

/// Throws NonFiniteValue / SchemaError for invalid series.
void validate_series(const TimeSeries& s, const std::string& id, const std::string& field);
/// Every TaskInstance invariant.
void validate_instance(const TaskInstance& inst);
/// Validates all instances, checks id uniqueness and builds the manifest.
Dataset make_dataset(std::vector<TaskInstance> instances);

// ---- files -------------------------------------------------------------------

Dataset load_dataset(const std::filesystem::path& jsonl);

struct RejectedLine {
    std::size_t line = 0;
    std::string id;       // empty when the line could not be parsed that far
    std::string task_id;  // likewise
    std::string reason;
};

struct LenientLoad {
    Dataset dataset;
    std::vector<RejectedLine> rejected;
};

/// Like load_dataset but keeps going: invalid lines are reported, not thrown.
LenientLoad load_dataset_lenient(const std::filesystem::path& jsonl);

/// Writes JSONL plus sidecars under "<stem>.sidecars/" next to the file.
void write_dataset(const Dataset& d, const std::filesystem::path& jsonl);
std::string manifest_json(const Dataset& d);
void write_manifest(const Dataset& d, const std::filesystem::path& path);

// ---- signal preparation ---------------------------------------------------------

/// Channel-major flattening [N x T'] -> [N * T'].
std::vector<double> flatten_input(const TimeSeries& x);
/// Inverse of flatten_input.
TimeSeries unflatten(std::span<const double> flat, std::size_t channels);

struct Normalized {
    std::vector<double> values;
    NormStats stats;
};

Normalized normalize(std::span<const double> signal);
std::vector<double> denormalize(std::span<const double> normalized, const NormStats& stats);

// ---- toy suite ---------------------------------------------------------------------

/// Instance counts per task family. Keys: classification, anomaly, mcq,
/// forecasting, imputation, event, synthesis; each count applies to every
/// task id of that family. A task id (e.g. "TFC03") may be used as a key too.
struct ToySizes {
    std::map<std::string, std::size_t> counts;

    static ToySizes uniform(std::size_t n);
    /// Counts used by gen-toy and the acceptance run.
    static ToySizes defaults();
    /// Parses "forecasting=50,mcq=10" on top of the defaults.
    static ToySizes parse(std::string_view spec);
    std::size_t count_for(const std::string& family, const std::string& task_id) const;
};

struct ToyTaskInfo {
    std::string task_id;
    std::string family;
    TaskType type;
};

/// The fixed list of task ids produced by generate_toy_suite.
const std::vector<ToyTaskInfo>& toy_tasks();

/// Deterministic in `seed`.
Dataset generate_toy_suite(std::uint64_t seed, const ToySizes& sizes);

/// Per task id, the last ceil(fraction * count) instances go to the second
/// dataset (at least one each side when count >= 2).
std::pair<Dataset, Dataset> split_holdout(const Dataset& d, double fraction);

}  // namespace timeomni
