// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "timeomni/autodiff.hpp"
#include "timeomni/layers.hpp"

namespace timeomni {

class Model;

/// magnitude (rows) * V / ||V||_rows, V = base + (alpha/rank) * B * A.
ad::Var dora_weight(ad::Var base, ad::Var a, ad::Var b, ad::Var magnitude, std::size_t rank, double alpha);

/// Attaches an adapter to `l`: freezes the base weight, adds A ~ N(0, 1/in),
/// B = 0 and magnitude = row norms of the base. The bias stays trainable.
void dora_attach(ParameterStore& store, Linear& l, const std::string& name, std::size_t rank, double alpha,
                 std::mt19937_64& rng);

struct DoraOptions {
    std::size_t rank = 8;
    double alpha = 32.0;
    bool backbone = true;        // attention + MLP linears
    bool heads = true;           // text head + regression heads
    bool freeze_backbone_rest = true;  // embeddings, positions, layer norms
    std::uint64_t seed = 0;
};

/// Wraps the selected linears of `model` in DoRA adapters. Returns the number
/// of linears wrapped.
std::size_t dora_wrap(Model& model, const DoraOptions& opts);

/// Sum over wrapped layers of rank*in + out*rank + out.
std::size_t dora_trainable_count(const Model& model);

}  // namespace timeomni
