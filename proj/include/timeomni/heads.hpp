// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "timeomni/backbone.hpp"
#include "timeomni/dataset.hpp"
#include "timeomni/layers.hpp"

namespace timeomni {

/// Regression heads read at most this many series rows (the router's token cap).
inline constexpr std::size_t kHeadRows = 200;

/// Regression head weights start at this fraction of the usual 1/sqrt(in)
/// scale, so an untrained head predicts roughly the series mean and the
/// random part of the weights adds little noise on unseen inputs.
inline constexpr double kHeadInitScale = 1e-2;

inline const std::vector<std::size_t>& default_head_ladder() {
    static const std::vector<std::size_t> ladder{8, 16, 32, 64, 96, 128, 256, 512, 720};
    return ladder;
}

/// Vocabulary projection. Stored [vocab x d_llm] like every other Linear.
struct TextHead {
    Linear unembed;
};

TextHead make_text_head(ParameterStore& store, std::size_t d_llm, std::mt19937_64& rng);

/// logits [rows x vocab] for hidden states [rows x d_llm].
ad::Var text_logits(Binder& b, const TextHead& head, ad::Var hidden);

struct RegressionHead {
    std::size_t out_length = 0;
    Linear proj;  // (t_cap * d_llm) -> out_length, with bias
};

struct HeadBank {
    std::vector<RegressionHead> heads;  // strictly increasing out_length
    std::size_t t_cap = kHeadRows;

    std::size_t max_length() const { return heads.empty() ? 0 : heads.back().out_length; }
};

HeadBank make_head_bank(ParameterStore& store, std::span<const std::size_t> ladder, std::size_t d_llm,
                        std::size_t t_cap, std::mt19937_64& rng);

/// Smallest head with out_length >= required. Throws LengthUnsupported.
const RegressionHead& select_head(const HeadBank& bank, std::size_t required);

/// Series rows -> zero-pad to t_cap -> flatten -> affine -> first `required`
/// values. Normalized scale; differentiable.
ad::Var predict_series_normalized(Binder& b, ad::Var llm_out, Span series, const HeadBank& bank,
                                  const RegressionHead& head, std::size_t required);

/// predict_series_normalized followed by denormalize.
std::vector<double> predict_series(Binder& b, ad::Var llm_out, Span series, const HeadBank& bank,
                                   const RegressionHead& head, std::size_t required, const NormStats& stats);

/// Greedy decoding. `next_logits` receives the tokens generated so far and
/// returns the logits row [vocab] for the next position. Stops after EOS (not
/// included in the result) or max_new tokens.
std::vector<TokenId> greedy_decode(const std::function<Tensor(std::span<const TokenId>)>& next_logits,
                                   std::size_t max_new);

}  // namespace timeomni
