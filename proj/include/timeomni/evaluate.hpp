// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <set>
#include <string>
#include <vector>

#include "timeomni/dataset.hpp"
#include "timeomni/metrics.hpp"
#include "timeomni/model.hpp"
#include "timeomni/report.hpp"

namespace timeomni {

/// SignalTooLong / ContextOverflow / LengthUnsupported -> TLS,
/// TooManyChannels -> TMC, InvalidUtf8 -> INF, anything else -> OTHER.
FailureReason classify_failure(const std::exception& e) noexcept;

/// Accepted answers per understanding task id (normalized labels; A-D for MCQ).
std::map<std::string, std::set<std::string>> label_sets(const Dataset& data);

/// Runs the model on one instance. Never throws: every error becomes a Failure.
/// Understanding answers outside `labels` are INF failures.
PredictionRecord predict_instance(const Model& m, const TaskInstance& inst, const std::set<std::string>& labels);

/// predict_instance over the dataset, in dataset order. May use several threads.
std::vector<PredictionRecord> predict_dataset(const Model& m, const Dataset& data);

/// Predictions, scores and rank table for a single model.
EvalReport evaluate_model(const Model& m, const std::string& name, const LenientLoad& data);

}  // namespace timeomni
