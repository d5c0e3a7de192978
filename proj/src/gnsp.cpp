// Copyright 2026 The grip authors
// SPDX-License-Identifier: Apache-2.0

#include "grip/gnsp.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "grip/group_norms.hpp"
#include "grip/gric.hpp"
#include "grip/rng.hpp"

namespace grip {

namespace {

Eigen::VectorXcd random_complex(Rng& rng, Index n) {
  Eigen::VectorXcd v(n);
  for (Index i = 0; i < n; ++i) v(i) = rng.normal_complex();
  return v;
}

// Unit vector with complex Gaussian entries on the union of the given groups.
Eigen::VectorXcd random_on_support(Rng& rng, const GroupPartition& p,
                                   const std::vector<Index>& support) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(p.ambient_dim());
  for (Index gi : support)
    for (Index idx : p.group(gi)) v(idx) = rng.normal_complex();
  const double nrm = v.norm();
  if (nrm > 0.0) v /= nrm;
  return v;
}

std::vector<Index> shuffled_groups(Rng& rng, Index count) {
  std::vector<Index> order(size_t(count));
  std::iota(order.begin(), order.end(), Index(0));
  for (Index i = count - 1; i > 0; --i) {
    const auto j = Index(rng.below(std::uint64_t(i + 1)));
    std::swap(order[size_t(i)], order[size_t(j)]);
  }
  return order;
}

}  // namespace

std::vector<GnspViolation> gnsp_falsify(const Eigen::MatrixXcd& a,
                                        const GroupPartition& p, Index s, double rho,
                                        double tau, std::uint64_t trials,
                                        std::uint64_t seed) {
  if (a.cols() != p.ambient_dim())
    throw std::invalid_argument("gnsp_falsify: matrix does not match partition");
  if (s < 1 || s > p.group_count())
    throw std::invalid_argument("gnsp_falsify: order out of range");
  if (trials < 1) throw std::invalid_argument("gnsp_falsify: trials must be >= 1");

  const Index dim = a.cols();
  const Index G = p.group_count();

  // Numerical null space of A, computed once.
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double sv_tol =
      sv.size() > 0 ? sv(0) * 1e-12 * double(std::max(a.rows(), a.cols())) : 0.0;
  Index rank = 0;
  for (Index i = 0; i < sv.size(); ++i)
    if (sv(i) > sv_tol) ++rank;
  const Index nullity = dim - rank;
  const Eigen::MatrixXcd null_basis = svd.matrixV().rightCols(nullity);

  std::vector<GnspViolation> violations;
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng(seed, t);
    Eigen::VectorXcd v;
    switch (t % 3) {
      case 0:
        v = random_complex(rng, dim);
        break;
      case 1: {
        const Index k = 1 + Index(rng.below(std::uint64_t(std::min<Index>(2 * s, G))));
        auto order = shuffled_groups(rng, G);
        order.resize(size_t(k));
        v = random_on_support(rng, p, order);
        break;
      }
      default:
        if (nullity > 0)
          v = null_basis * random_complex(rng, nullity);
        else
          v = random_complex(rng, dim);
        break;
    }
    const double nrm = v.norm();
    if (nrm == 0.0) continue;
    v /= nrm;

    // Per-group norms; S = the s largest (this S binds: it maximizes the
    // left side while removing the largest terms from the complement sum).
    std::vector<std::pair<double, Index>> norms(size_t(G));
    for (Index i = 0; i < G; ++i)
      norms[size_t(i)] = {detail::restricted_norm(v, p.group(i)), i};
    std::stable_sort(norms.begin(), norms.end(),
                     [](const auto& x, const auto& y) { return x.first > y.first; });

    double head_sq = 0.0, tail_l1 = 0.0;
    for (Index r = 0; r < G; ++r) {
      if (r < s)
        head_sq += norms[size_t(r)].first * norms[size_t(r)].first;
      else
        tail_l1 += norms[size_t(r)].first;
    }
    const double lhs = std::sqrt(head_sq);
    const double rhs = rho / std::sqrt(double(s)) * tail_l1 + tau * (a * v).norm();
    if (lhs > rhs + 1e-12 * (1.0 + lhs)) violations.push_back({v, lhs, rhs});
  }
  return violations;
}

DisjointSupportReport disjoint_support_check(const Eigen::MatrixXcd& a,
                                             const GroupPartition& p, Index s,
                                             double delta, std::uint64_t trials,
                                             std::uint64_t seed, int vectors_per_pair) {
  if (a.cols() != p.ambient_dim())
    throw std::invalid_argument("disjoint_support_check: matrix/partition mismatch");
  const Index G = p.group_count();
  if (s < 1 || 2 * s > G)
    throw std::invalid_argument("disjoint_support_check: needs 2s <= G");
  if (vectors_per_pair < 1)
    throw std::invalid_argument("disjoint_support_check: vectors_per_pair >= 1");

  DisjointSupportReport report;

  auto run_pair = [&](const std::vector<Index>& s0, const std::vector<Index>& s1,
                      std::uint64_t stream) {
    Rng rng(seed, stream);
    for (int k = 0; k < vectors_per_pair; ++k) {
      const Eigen::VectorXcd u = random_on_support(rng, p, s0);
      const Eigen::VectorXcd w = random_on_support(rng, p, s1);
      const Eigen::VectorXcd au = a * u;
      const Eigen::VectorXcd aw = a * w;
      const double t = au.squaredNorm() - 1.0;
      double bound_sq = delta * delta - t * t;
      if (bound_sq < 0.0) {
        report.clamped = true;
        bound_sq = 0.0;
      }
      const double pairing = std::abs(aw.dot(au));
      report.max_ratio =
          std::max(report.max_ratio, pairing / (std::sqrt(bound_sq) + 1e-8));
    }
    ++report.pairs_tested;
  };

  if (trials == 0) {
    // Exhaustive sweep over ordered disjoint pairs of s-subsets.
    std::vector<Index> sel0(size_t(s)), sel1(size_t(s));
    std::uint64_t stream = 0;
    std::vector<Index> first(size_t(s));
    for (Index i = 0; i < s; ++i) first[size_t(i)] = i;
    auto advance = [&](std::vector<Index>& c, Index n) {
      Index i = s - 1;
      while (i >= 0 && c[size_t(i)] == n - s + i) --i;
      if (i < 0) return false;
      ++c[size_t(i)];
      for (Index j = i + 1; j < s; ++j) c[size_t(j)] = c[size_t(j - 1)] + 1;
      return true;
    };
    sel0 = first;
    while (true) {
      // Remaining groups after removing sel0.
      std::vector<Index> rest;
      std::vector<char> used(size_t(G), 0);
      for (Index gi : sel0) used[size_t(gi)] = 1;
      for (Index i = 0; i < G; ++i)
        if (!used[size_t(i)]) rest.push_back(i);
      std::vector<Index> pick(size_t(s));
      for (Index i = 0; i < s; ++i) pick[size_t(i)] = i;
      while (true) {
        for (Index i = 0; i < s; ++i) sel1[size_t(i)] = rest[size_t(pick[size_t(i)])];
        run_pair(sel0, sel1, stream++);
        if (!advance(pick, Index(rest.size()))) break;
      }
      if (!advance(sel0, G)) break;
    }
  } else {
    for (std::uint64_t t = 0; t < trials; ++t) {
      Rng rng(seed, derive_seed(seed, t, 0x5u));
      const auto order = shuffled_groups(rng, G);
      std::vector<Index> s0(order.begin(), order.begin() + s);
      std::vector<Index> s1(order.begin() + s, order.begin() + 2 * s);
      run_pair(s0, s1, t);
    }
  }
  return report;
}

}  // namespace grip
