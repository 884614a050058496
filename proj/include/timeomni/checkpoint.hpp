// SPDX-License-Identifier: Apache-2.0
#pragma once

// TOK1 checkpoint format (all integers and reals little-endian):
//
//   "TOK1"                      4-byte magic
//   u32 version                 currently 1
//   u32 n_meta
//   n_meta x { u32 key_len, key bytes, u64 value_len, value bytes }
//   u32 n_tensors
//   n_tensors x { u32 name_len, name bytes, u32 ndim, u64 dims[ndim], f64 data[prod(dims)] }
//
// Entries keep their insertion order, so saving the same state twice yields
// identical bytes.

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "timeomni/tensor.hpp"

namespace timeomni {

inline constexpr char kCheckpointMagic[4] = {'T', 'O', 'K', '1'};
inline constexpr std::uint32_t kCheckpointVersion = 1;

struct Checkpoint {
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<std::pair<std::string, Tensor>> tensors;

    void set_meta(const std::string& key, std::string value);
    const std::string* find_meta(const std::string& key) const;
    void add_tensor(std::string name, Tensor t);
    const Tensor* find_tensor(const std::string& name) const;
};

std::string encode_checkpoint(const Checkpoint& ckpt);
Checkpoint decode_checkpoint(const std::string& bytes);

void save_checkpoint(const std::filesystem::path& path, const Checkpoint& ckpt);
Checkpoint load_checkpoint(const std::filesystem::path& path);

/// Appends every parameter value under "<prefix><name>".
void export_parameters(const ParameterStore& store, Checkpoint& ckpt, const std::string& prefix = "");
/// Copies values back by name; every store parameter must be present with a matching shape.
void import_parameters(const Checkpoint& ckpt, ParameterStore& store, const std::string& prefix = "");

}  // namespace timeomni
