// Copyright 2026 The grip authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GRIP_GROUP_PARTITION_HPP
#define GRIP_GROUP_PARTITION_HPP

#include <Eigen/Core>

#include <string>
#include <vector>

#include <json.hpp>

namespace grip {

using Index = Eigen::Index;

/// A disjoint cover of the index set {0, ..., D-1} by G nonempty groups.
///
/// Groups need not be contiguous and may differ in size. All indices in this
/// library are 0-based. Instances are immutable after construction and safe
/// to share across threads.
class GroupPartition {
 public:
  /// Validates that the groups are nonempty, pairwise disjoint and cover
  /// [0, D) exactly; throws std::invalid_argument otherwise.
  GroupPartition(Index ambient_dim, std::vector<std::vector<Index>> groups);

  /// D consecutive indices split into `num_groups` equal contiguous groups.
  static GroupPartition contiguous(Index ambient_dim, Index num_groups);

  /// One group per index (plain sparsity).
  static GroupPartition singletons(Index ambient_dim);

  /// Groups {i, d+i, ..., (L-1)d+i} for i in [0, d): index i of every length-d
  /// block belongs to group i. This is the partition that ties L per-sensor
  /// signals with a shared support pattern into one group-sparse vector.
  static GroupPartition interleaved(Index block_dim, Index num_blocks);

  Index ambient_dim() const { return ambient_dim_; }
  Index group_count() const { return Index(groups_.size()); }
  const std::vector<Index>& group(Index i) const { return groups_.at(size_t(i)); }
  const std::vector<std::vector<Index>>& groups() const { return groups_; }
  Index group_size(Index i) const { return Index(groups_.at(size_t(i)).size()); }
  Index max_group_size() const { return max_group_size_; }

  nlohmann::json to_json() const;
  static GroupPartition from_json(const nlohmann::json& j);

  bool operator==(const GroupPartition& other) const {
    return ambient_dim_ == other.ambient_dim_ && groups_ == other.groups_;
  }

 private:
  Index ambient_dim_;
  std::vector<std::vector<Index>> groups_;
  Index max_group_size_;
};

}  // namespace grip

#endif  // GRIP_GROUP_PARTITION_HPP
