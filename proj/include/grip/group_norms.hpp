// Copyright 2026 The grip authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GRIP_GROUP_NORMS_HPP
#define GRIP_GROUP_NORMS_HPP

#include <Eigen/Core>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "grip/group_partition.hpp"
#include "grip/rng.hpp"

namespace grip {

namespace detail {

template <typename Derived>
void check_ambient(const Eigen::MatrixBase<Derived>& x, const GroupPartition& p) {
  if (x.size() != p.ambient_dim())
    throw std::invalid_argument("vector length does not match partition ambient_dim");
}

/// Euclidean norm of x restricted to one group.
template <typename Derived>
double restricted_norm(const Eigen::MatrixBase<Derived>& x,
                       const std::vector<Index>& group) {
  double sq = 0.0;
  for (Index idx : group) {
    using std::norm;
    sq += norm(x.derived()(idx));
  }
  return std::sqrt(sq);
}

}  // namespace detail

/// Mixed group norm: the l_p norm of the vector of per-group Euclidean norms.
/// p = infinity gives the max; p = 2 coincides with the plain Euclidean norm.
template <typename Derived>
double group_norm(const Eigen::MatrixBase<Derived>& x, const GroupPartition& p,
                  double order) {
  detail::check_ambient(x, p);
  if (!(order >= 1.0)) throw std::invalid_argument("group norm requires p >= 1");

  if (std::isinf(order)) {
    double best = 0.0;
    for (const auto& g : p.groups())
      best = std::max(best, detail::restricted_norm(x, g));
    return best;
  }
  if (order == 2.0) return x.norm();
  if (order == 1.0) {
    double acc = 0.0;
    for (const auto& g : p.groups()) acc += detail::restricted_norm(x, g);
    return acc;
  }
  double acc = 0.0;
  for (const auto& g : p.groups())
    acc += std::pow(detail::restricted_norm(x, g), order);
  return std::pow(acc, 1.0 / order);
}

/// Number of groups carrying mass above `tol` (the group l_0 pseudonorm).
/// `tol` absorbs floating-point noise; 0 means exact support counting.
template <typename Derived>
Index group_support_count(const Eigen::MatrixBase<Derived>& x,
                          const GroupPartition& p, double tol = 0.0) {
  detail::check_ambient(x, p);
  if (tol < 0.0) throw std::invalid_argument("tolerance must be nonnegative");
  Index count = 0;
  for (const auto& g : p.groups())
    if (detail::restricted_norm(x, g) > tol) ++count;
  return count;
}

/// Best approximation of x by a vector supported on s groups, together with
/// the group-l1 approximation error. Keeps the s groups of largest Euclidean
/// norm; ties go to the lower group index so results are deterministic.
template <typename Derived>
std::pair<typename Derived::PlainObject, double> best_group_approx(
    const Eigen::MatrixBase<Derived>& x, const GroupPartition& p, Index s) {
  detail::check_ambient(x, p);
  const Index G = p.group_count();
  if (s < 1 || s > G) throw std::invalid_argument("approximation order out of range");

  std::vector<std::pair<double, Index>> norms(size_t(G));
  for (Index i = 0; i < G; ++i)
    norms[size_t(i)] = {detail::restricted_norm(x, p.group(i)), i};
  // Sort by descending norm, ascending index on ties.
  std::stable_sort(norms.begin(), norms.end(), [](const auto& a, const auto& b) {
    return a.first > b.first;
  });

  typename Derived::PlainObject approx = Derived::PlainObject::Zero(x.size());
  double error = 0.0;
  for (Index r = 0; r < G; ++r) {
    const auto& [nrm, gi] = norms[size_t(r)];
    if (r < s) {
      for (Index idx : p.group(gi)) approx(idx) = x.derived()(idx);
    } else {
      error += nrm;
    }
  }
  return {std::move(approx), error};
}

enum class AmplitudeModel { unit_norm_gaussian, rademacher };

/// A vector together with the partition that gives it its group structure.
struct GroupSparseSignal {
  Eigen::VectorXcd values;
  GroupPartition partition;
};

/// Draws a unit-norm signal supported on s uniformly random groups.
/// Deterministic in the seed. Amplitudes on the support are either complex
/// Gaussian or Rademacher before the final normalization to ||x||_2 = 1.
GroupSparseSignal random_group_sparse(const GroupPartition& p, Index s,
                                      std::uint64_t seed,
                                      AmplitudeModel amplitude =
                                          AmplitudeModel::unit_norm_gaussian);

/// Same, but the support is drawn from the given subset of group indices.
GroupSparseSignal random_group_sparse_from(const GroupPartition& p, Index s,
                                           const std::vector<Index>& allowed_groups,
                                           std::uint64_t seed,
                                           AmplitudeModel amplitude =
                                               AmplitudeModel::unit_norm_gaussian);

inline constexpr double group_norm_infinity = std::numeric_limits<double>::infinity();

}  // namespace grip

#endif  // GRIP_GROUP_NORMS_HPP
