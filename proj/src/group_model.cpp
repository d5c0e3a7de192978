// Copyright 2026 The grip authors
// SPDX-License-Identifier: Apache-2.0

#include "grip/group_norms.hpp"

#include <stdexcept>

namespace grip {

namespace {

// Partial Fisher-Yates: the first s entries of a shuffle of `pool`.
std::vector<Index> sample_without_replacement(std::vector<Index> pool, Index s,
                                              Rng& rng) {
  for (Index i = 0; i < s; ++i) {
    const auto j = i + Index(rng.below(std::uint64_t(pool.size() - size_t(i))));
    std::swap(pool[size_t(i)], pool[size_t(j)]);
  }
  pool.resize(size_t(s));
  return pool;
}

}  // namespace

GroupSparseSignal random_group_sparse_from(const GroupPartition& p, Index s,
                                           const std::vector<Index>& allowed_groups,
                                           std::uint64_t seed,
                                           AmplitudeModel amplitude) {
  if (s < 1 || s > Index(allowed_groups.size()))
    throw std::invalid_argument("sparsity order out of range");
  Rng rng(seed);
  const std::vector<Index> support = sample_without_replacement(allowed_groups, s, rng);

  Eigen::VectorXcd x = Eigen::VectorXcd::Zero(p.ambient_dim());
  for (Index gi : support) {
    for (Index idx : p.group(gi)) {
      x(idx) = amplitude == AmplitudeModel::unit_norm_gaussian
                   ? rng.normal_complex()
                   : std::complex<double>(rng.rademacher(), 0.0);
    }
  }
  const double nrm = x.norm();
  if (nrm == 0.0) {
    // Probability-zero event for Gaussian draws; resample deterministically.
    return random_group_sparse_from(p, s, allowed_groups, derive_seed(seed, 1), amplitude);
  }
  x /= nrm;
  return {std::move(x), p};
}

GroupSparseSignal random_group_sparse(const GroupPartition& p, Index s,
                                      std::uint64_t seed, AmplitudeModel amplitude) {
  std::vector<Index> all(size_t(p.group_count()));
  for (Index i = 0; i < p.group_count(); ++i) all[size_t(i)] = i;
  return random_group_sparse_from(p, s, all, seed, amplitude);
}

}  // namespace grip
