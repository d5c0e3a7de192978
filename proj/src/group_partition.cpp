// Copyright 2026 The grip authors
// SPDX-License-Identifier: Apache-2.0

#include "grip/group_partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace grip {

GroupPartition::GroupPartition(Index ambient_dim,
                               std::vector<std::vector<Index>> groups)
    : ambient_dim_(ambient_dim), groups_(std::move(groups)), max_group_size_(0) {
  if (ambient_dim_ <= 0) throw std::invalid_argument("ambient_dim must be positive");
  if (groups_.empty()) throw std::invalid_argument("partition needs at least one group");

  std::vector<char> seen(size_t(ambient_dim_), 0);
  Index total = 0;
  for (const auto& g : groups_) {
    if (g.empty()) throw std::invalid_argument("empty group in partition");
    for (Index idx : g) {
      if (idx < 0 || idx >= ambient_dim_)
        throw std::invalid_argument("group index out of range");
      if (seen[size_t(idx)])
        throw std::invalid_argument("groups overlap at index " + std::to_string(idx));
      seen[size_t(idx)] = 1;
    }
    total += Index(g.size());
    max_group_size_ = std::max(max_group_size_, Index(g.size()));
  }
  if (total != ambient_dim_)
    throw std::invalid_argument("groups do not cover the full index set");
}

GroupPartition GroupPartition::contiguous(Index ambient_dim, Index num_groups) {
  if (num_groups <= 0 || ambient_dim % num_groups != 0)
    throw std::invalid_argument("num_groups must divide ambient_dim");
  const Index size = ambient_dim / num_groups;
  std::vector<std::vector<Index>> groups(size_t(num_groups));
  for (Index i = 0; i < num_groups; ++i) {
    groups[size_t(i)].resize(size_t(size));
    for (Index j = 0; j < size; ++j) groups[size_t(i)][size_t(j)] = i * size + j;
  }
  return GroupPartition(ambient_dim, std::move(groups));
}

GroupPartition GroupPartition::singletons(Index ambient_dim) {
  return contiguous(ambient_dim, ambient_dim);
}

GroupPartition GroupPartition::interleaved(Index block_dim, Index num_blocks) {
  if (block_dim <= 0 || num_blocks <= 0)
    throw std::invalid_argument("block_dim and num_blocks must be positive");
  std::vector<std::vector<Index>> groups(size_t(block_dim));
  for (Index i = 0; i < block_dim; ++i) {
    groups[size_t(i)].resize(size_t(num_blocks));
    for (Index l = 0; l < num_blocks; ++l)
      groups[size_t(i)][size_t(l)] = l * block_dim + i;
  }
  return GroupPartition(block_dim * num_blocks, std::move(groups));
}

nlohmann::json GroupPartition::to_json() const {
  return {{"ambient_dim", ambient_dim_}, {"groups", groups_}};
}

GroupPartition GroupPartition::from_json(const nlohmann::json& j) {
  return GroupPartition(j.at("ambient_dim").get<Index>(),
                        j.at("groups").get<std::vector<std::vector<Index>>>());
}

}  // namespace grip
