// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "timeomni/dataset.hpp"
#include "timeomni/metrics.hpp"

namespace timeomni {

struct ModelScores {
    std::string model;
    std::vector<TaskScore> tasks;  // manifest order
    std::vector<PredictionRecord> records;
};

struct EvalReport {
    std::vector<ModelScores> models;
    std::map<std::string, ManifestEntry> manifest;
    std::optional<RankTable> understanding;
    std::optional<RankTable> generation;
    std::vector<RejectedLine> rejected;  // input lines that could not be evaluated
};

/// One TaskScore per manifest task for every model, plus rank tables.
/// Throws UnknownInstanceId for records that reference no dataset instance.
EvalReport score_run(const Dataset& data, const std::vector<std::pair<std::string, std::vector<PredictionRecord>>>& runs);

/// Rebuilds rank tables from the task scores of several single-model reports.
/// Every report must cover the same task ids.
EvalReport merge_reports(const std::vector<EvalReport>& reports);

std::string report_json(const EvalReport& r, bool include_records = true);
EvalReport parse_report_json(const std::string& text);

/// Human table: per-task metrics, then per-discipline understanding (F1) and
/// generation (swMAPE) tables with AvgRk and "(completed/total)" markers.
std::string render_report(const EvalReport& r);

/// "%.1f" below 1000, otherwise one-decimal scientific like "1.2e3".
std::string format_value(double v);
std::string completion_marker(std::size_t completed, std::size_t total);

}  // namespace timeomni
