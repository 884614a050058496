// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "timeomni/backbone.hpp"
#include "timeomni/dataset.hpp"
#include "timeomni/encoder.hpp"
#include "timeomni/heads.hpp"

namespace timeomni {

struct ModelConfig {
    std::size_t d_enc = 16;
    std::size_t num_prototypes = 1000;
    std::size_t encoder_heads = 4;
    unsigned expert_min_log2 = 0;
    unsigned expert_max_log2 = 16;
    BackboneConfig backbone;
    std::vector<std::size_t> head_ladder = default_head_ladder();
    std::size_t head_rows = kHeadRows;
    std::size_t max_new_tokens = 16;
    std::uint64_t seed = 0;

    void validate() const;
};

class Model {
public:
    ModelConfig config;
    ParameterStore store;
    ExpertFamily family;
    ReprogrammingParams reprog;
    Backbone backbone;
    TextHead text_head;
    HeadBank bank;
};

/// Random initialisation, deterministic in config.seed.
Model build_model(const ModelConfig& cfg);

/// The string an understanding instance should be answered with.
std::string answer_text(const TaskInstance& inst);

/// Mean cross-entropy over the answer bytes and the closing EOS, with the
/// series and prompt as context.
ad::Var understanding_loss(Binder& b, const Model& m, const TaskInstance& inst);

/// Mean squared error on the normalized scale, averaged over channels when
/// channels are predicted one at a time.
ad::Var generation_loss(Binder& b, const Model& m, const TaskInstance& inst);

/// Greedy decode; throws InvalidUtf8 if the model emits a non-text token.
std::string predict_text(const Model& m, const TaskInstance& inst);

/// Series prediction on the original scale. Per-channel when the target has
/// as many channels as the input (N > 1), otherwise one pass over the
/// flattened input.
TimeSeries predict_multichannel(const Model& m, const TaskInstance& inst);

/// Event indices: regression output denormalized, rounded and clamped to the input range.
std::vector<std::size_t> predict_indices(const Model& m, const TaskInstance& inst);

/// Normalisation applied to index targets for an input of `length` points.
NormStats index_stats(std::size_t length);

/// One generation pass: optional flat signal, prompt, required length.
/// Returns the normalized prediction and the stats that undo it.
struct SeriesPass {
    ad::Var normalized;
    NormStats stats;
};
SeriesPass run_series_pass(Binder& b, const Model& m, std::span<const TokenId> prompt_ids,
                           std::optional<std::span<const double>> flat, std::size_t required);

}  // namespace timeomni
