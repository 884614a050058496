// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>

#include "timeomni/autodiff.hpp"
#include "timeomni/nn.hpp"
#include "timeomni/tensor.hpp"

namespace timeomni {

/// Trainable low-rank + magnitude decomposition attached to a frozen base weight.
/// Effective weight: magnitude (per row) * V / ||V||_row with V = base + (alpha/rank) * B * A.
struct DoraAdapter {
    ParamId a = 0;          // [rank x in]
    ParamId b = 0;          // [out x rank], zero at init
    ParamId magnitude = 0;  // [out], row norms of base at init
    std::size_t rank = 8;
    double alpha = 32.0;
};

/// Affine map y = x W^T + b with W stored [out x in].
struct Linear {
    ParamId weight = 0;
    std::optional<ParamId> bias;
    std::optional<DoraAdapter> dora;
    std::size_t in = 0;
    std::size_t out = 0;
};

/// Registers a Linear with N(0, init_std^2) weights and zero bias.
Linear make_linear(ParameterStore& store, const std::string& name, std::size_t in, std::size_t out, bool with_bias,
                   double init_std, std::mt19937_64& rng);

/// Binds a ParameterStore to one tape. Each parameter enters the tape once and
/// each Linear's effective (possibly DoRA-composed) weight is built once, so a
/// batch of instances sharing a Binder shares those nodes.
class Binder {
public:
    /// Training: gradients flow into trainable parameters of `store`.
    Binder(ad::Tape& tape, ParameterStore& store);
    /// Inference: parameters enter as constants.
    Binder(ad::Tape& tape, const ParameterStore& store);

    ad::Tape& tape() { return tape_; }
    const ParameterStore& store() const { return *const_store_; }

    ad::Var param(ParamId id);
    ad::Var weight(const Linear& l);
    ad::Var apply(const Linear& l, ad::Var x);

private:
    ad::Tape& tape_;
    ParameterStore* store_ = nullptr;  // null in inference mode
    const ParameterStore* const_store_ = nullptr;
    std::unordered_map<ParamId, ad::Var> params_;
    std::unordered_map<ParamId, ad::Var> weights_;
};

/// Attention projection set built from four Linears. The key projection has
/// no bias: softmax cancels a per-query constant shift of the scores.
struct AttentionLinears {
    Linear q, k, v, o;
};

nn::AttentionVars bind_attention(Binder& b, const AttentionLinears& a);

}  // namespace timeomni
