// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>

#include "timeomni/autodiff.hpp"

namespace timeomni::nn {

/// Bound projection set of one multi-head attention block.
/// Weights follow the [out x in] convention used by ad::linear.
struct AttentionVars {
    ad::Var wq, bq;
    ad::Var wk, bk;
    ad::Var wv, bv;
    ad::Var wo, bo;
};

/// Queries from `q_in`, keys and values from `kv_in`, no mask. Heads are
/// concatenated and output-projected. `probs_out` receives the attention
/// weights [heads x L_q x L_kv] when set.
ad::Var multi_head_cross_attention(ad::Var q_in, ad::Var kv_in, const AttentionVars& p, std::size_t heads,
                                   Tensor* probs_out = nullptr);

/// Same projections with q = k = v = x and a causal mask (row i sees j <= i).
ad::Var causal_self_attention(ad::Var x, const AttentionVars& p, std::size_t heads, Tensor* probs_out = nullptr);

}  // namespace timeomni::nn
