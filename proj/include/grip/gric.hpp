// Copyright 2026 The grip authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GRIP_GRIC_HPP
#define GRIP_GRIC_HPP

#include <Eigen/Core>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "grip/group_partition.hpp"
#include "grip/sensing.hpp"

namespace grip {

enum class GricMode { exact_enumeration, monte_carlo };

std::string to_string(GricMode mode);

/// Estimated group restricted isometry constant of order s: the largest
/// deviation of ||B x||_2^2 from 1 over unit vectors x supported on s groups.
struct GripEstimate {
  double delta = 0.0;
  Index order = 0;
  GricMode mode = GricMode::exact_enumeration;
  std::uint64_t supports_evaluated = 0;
  /// (lambda_min, lambda_max) of the restricted Gram matrix per evaluated
  /// support, in evaluation order.
  std::vector<std::pair<double, double>> per_support_extremes;

  nlohmann::json to_json() const;
};

struct GricOptions {
  /// Exact enumeration refuses to run past this many supports.
  std::uint64_t support_cap = 100'000;
  bool keep_extremes = true;
};

/// Computes the order-s constant of the dense matrix `composite` (already
/// carrying any normalization). Restricted to a fixed support the supremum
/// is attained at the extreme eigenvalues of the restricted Gram matrix, so
/// each support contributes max(lambda_max - 1, 1 - lambda_min) exactly;
/// sampling on the sphere would only ever under-estimate it.
///
/// exact_enumeration walks all C(G, s) supports; monte_carlo draws `trials`
/// supports (uniform without replacement within a trial, independent across
/// trials, trial t seeded from (seed, t)), hence is a lower bound on exact.
GripEstimate gric(const Eigen::MatrixXcd& composite, const GroupPartition& p, Index s,
                  GricMode mode = GricMode::exact_enumeration,
                  std::uint64_t trials = 0, std::uint64_t seed = 0,
                  const GricOptions& options = {});

/// Convenience overload: materializes the operator first.
GripEstimate gric(const BlockDiagonalOperator& op, const GroupPartition& p, Index s,
                  GricMode mode = GricMode::exact_enumeration,
                  std::uint64_t trials = 0, std::uint64_t seed = 0,
                  const GricOptions& options = {});

/// Number of s-subsets of [G], saturating at the cap sentinel.
std::uint64_t support_count(Index groups, Index s);

}  // namespace grip

#endif  // GRIP_GRIC_HPP
