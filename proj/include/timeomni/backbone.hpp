// SPDX-License-Identifier: Apache-2.0
#pragma once

// Byte-level tokenizer, prompt/series assembly and a small pre-norm decoder
// transformer that stands in for the pretrained language model.

#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "timeomni/autodiff.hpp"
#include "timeomni/layers.hpp"

namespace timeomni {

using TokenId = std::size_t;

namespace tokens {
inline constexpr TokenId kPad = 256;
inline constexpr TokenId kBos = 257;
inline constexpr TokenId kEos = 258;
inline constexpr TokenId kSeriesEmpty = 259;
inline constexpr std::size_t kVocabSize = 260;
}  // namespace tokens

/// Throws InvalidUtf8 with the offending byte offset.
void validate_utf8(std::string_view s);
/// BOS + bytes + EOS.
std::vector<TokenId> tokenize(std::string_view text);
/// Bytes only, no markers.
std::vector<TokenId> byte_tokens(std::string_view text);
/// Drops BOS/EOS/PAD, rejects TS_EMPTY, and validates the resulting bytes as UTF-8.
std::string detokenize(std::span<const TokenId> ids);

struct BackboneConfig {
    std::size_t d_llm = 32;
    std::size_t n_layers = 2;
    std::size_t n_heads = 4;
    std::size_t max_positions = 512;
    std::size_t mlp_ratio = 4;

    void validate() const;
};

struct DecoderLayer {
    ParamId ln1_gain = 0, ln1_bias = 0;
    AttentionLinears attn;
    ParamId ln2_gain = 0, ln2_bias = 0;
    Linear fc1, fc2;
};

struct Backbone {
    BackboneConfig config;
    ParamId token_embedding = 0;  // [vocab x d_llm]
    ParamId positions = 0;        // [max_positions x d_llm]
    std::vector<DecoderLayer> layers;
    ParamId final_gain = 0, final_bias = 0;
};

Backbone make_backbone(ParameterStore& store, const BackboneConfig& cfg, std::mt19937_64& rng);

enum class Mode { Understanding, Generation };

/// Half-open row range [begin, end).
struct Span {
    std::size_t begin = 0;
    std::size_t end = 0;
    std::size_t size() const { return end - begin; }
    friend bool operator==(const Span&, const Span&) = default;
};

struct AssembledInput {
    ad::Var embeddings;  // [L_total x d_llm]
    Span series;
    Span prompt;
    std::size_t length() const { return series.size() + prompt.size(); }
};

/// Understanding: [series ; prompt]. Generation: [prompt ; series].
/// Without a series the slot holds one TS_EMPTY embedding.
AssembledInput assemble(Binder& b, const Backbone& bb, std::optional<ad::Var> x_enc,
                        std::span<const TokenId> prompt_ids, Mode mode);

/// Pure span bookkeeping of assemble.
std::pair<Span, Span> assembly_spans(std::size_t series_len, std::size_t prompt_len, Mode mode);

/// Throws ContextOverflow if the sequence is longer than max_positions.
ad::Var backbone_forward(Binder& b, const Backbone& bb, ad::Var x);

}  // namespace timeomni
