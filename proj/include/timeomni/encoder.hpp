// SPDX-License-Identifier: Apache-2.0
#pragma once

// Time-series encoder: a deterministic router picks one patch expert so the
// token count lands in [100, 200]; the expert patchifies and convolves the
// flattened signal; reprogramming cross-attends the patches to a prototype
// bank projected from the language model's vocabulary embeddings.

#include <cstddef>
#include <random>
#include <span>
#include <vector>

#include "timeomni/autodiff.hpp"
#include "timeomni/dataset.hpp"
#include "timeomni/layers.hpp"

namespace timeomni {

/// Router target: at most this many encoder tokens per signal.
inline constexpr std::size_t kMaxEncoderTokens = 200;

struct PatchExpert {
    std::size_t patch_size = 1;
    ParamId conv_weight = 0;  // [d_enc x patch_size]
    ParamId conv_bias = 0;    // [d_enc]
};

/// One expert per power-of-two patch size, ascending.
struct ExpertFamily {
    std::vector<PatchExpert> experts;
    std::size_t d_enc = 0;

    std::size_t max_patch() const { return experts.empty() ? 0 : experts.back().patch_size; }
    std::size_t max_length() const { return kMaxEncoderTokens * max_patch(); }
};

ExpertFamily make_expert_family(ParameterStore& store, std::size_t d_enc, unsigned min_log2, unsigned max_log2,
                                std::mt19937_64& rng);

struct ReprogrammingParams {
    ParamId vocab_proj = 0;  // [num_prototypes x vocab_size]
    AttentionLinears attn;   // q: d_enc -> d_llm, k/v: d_llm -> d_llm, o: d_llm -> d_llm
    Linear final_proj;       // d_llm -> d_llm, no bias
    std::size_t num_prototypes = 1000;
    std::size_t heads = 1;
};

ReprogrammingParams make_reprogramming(ParameterStore& store, std::size_t d_enc, std::size_t d_llm,
                                       std::size_t vocab_size, std::size_t num_prototypes, std::size_t heads,
                                       std::mt19937_64& rng);

/// Smallest patch in `ladder` (ascending) with 200 * p >= length.
/// Throws SignalTooLong when even the largest patch is too small.
std::size_t route_patch_size(std::size_t length, std::span<const std::size_t> ladder);
const PatchExpert& route(std::size_t length, const ExpertFamily& family);

/// Reshape to [ceil(T/patch) x patch], zero-padding the last row.
Tensor patchify(std::span<const double> signal, std::size_t patch);

ad::Var embed_patches(Binder& b, std::span<const double> signal, const PatchExpert& expert);

/// Cross-attention of patch embeddings (queries) onto prototypes = vocab_proj * E.
ad::Var reprogram(Binder& b, ad::Var x_patch, ad::Var vocab_embeddings, const ReprogrammingParams& params,
                  Tensor* attention_out = nullptr);

struct EncoderOutput {
    ad::Var x_enc;  // [t_enc x d_llm]
    std::size_t patch_size_used = 0;
    std::size_t t_enc = 0;
    NormStats stats;  // of the flattened input, for denormalisation
};

/// normalize -> route -> embed_patches -> reprogram on an already flattened signal.
EncoderOutput encode_flat(Binder& b, std::span<const double> flat, const ExpertFamily& family,
                          ad::Var vocab_embeddings, const ReprogrammingParams& params);

/// Flattens `x` channel-major, then encode_flat.
EncoderOutput encode(Binder& b, const TimeSeries& x, const ExpertFamily& family, ad::Var vocab_embeddings,
                     const ReprogrammingParams& params);

}  // namespace timeomni
