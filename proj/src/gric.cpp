// Copyright 2026 The grip authors
// SPDX-License-Identifier: Apache-2.0

#include "grip/gric.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "grip/rng.hpp"

namespace grip {

std::string to_string(GricMode mode) {
  return mode == GricMode::exact_enumeration ? "exact_enumeration" : "monte_carlo";
}

nlohmann::json GripEstimate::to_json() const {
  nlohmann::json j{{"delta", delta},
                   {"order", order},
                   {"mode", to_string(mode)},
                   {"supports_evaluated", supports_evaluated}};
  if (!per_support_extremes.empty()) {
    nlohmann::json ext = nlohmann::json::array();
    for (const auto& [lo, hi] : per_support_extremes) ext.push_back({lo, hi});
    j["per_support_extremes"] = std::move(ext);
  }
  return j;
}

std::uint64_t support_count(Index groups, Index s) {
  // C(G, s) with saturation; values beyond 2^63 are never enumerable anyway.
  const std::uint64_t sentinel = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (Index i = 0; i < s; ++i) {
    const std::uint64_t num = std::uint64_t(groups - i);
    if (result > sentinel / num) return sentinel;
    result = result * num / std::uint64_t(i + 1);
  }
  return result;
}

namespace {

std::pair<double, double> support_extremes(const Eigen::MatrixXcd& composite,
                                           const GroupPartition& p,
                                           const std::vector<Index>& support) {
  std::vector<Index> cols;
  for (Index gi : support)
    cols.insert(cols.end(), p.group(gi).begin(), p.group(gi).end());
  std::sort(cols.begin(), cols.end());

  Eigen::MatrixXcd restricted(composite.rows(), Index(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c)
    restricted.col(Index(c)) = composite.col(cols[c]);

  const Eigen::MatrixXcd gram = restricted.adjoint() * restricted;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  return {ev(0), ev(ev.size() - 1)};
}

}  // namespace

GripEstimate gric(const Eigen::MatrixXcd& composite, const GroupPartition& p, Index s,
                  GricMode mode, std::uint64_t trials, std::uint64_t seed,
                  const GricOptions& options) {
  if (composite.cols() != p.ambient_dim())
    throw std::invalid_argument("gric: matrix does not match partition");
  const Index G = p.group_count();
  if (s < 1 || s > G) throw std::invalid_argument("gric: order out of range");

  GripEstimate est;
  est.order = s;
  est.mode = mode;

  auto record = [&](const std::vector<Index>& support) {
    const auto [lo, hi] = support_extremes(composite, p, support);
    est.delta = std::max(est.delta, std::max(hi - 1.0, 1.0 - lo));
    if (options.keep_extremes) est.per_support_extremes.emplace_back(lo, hi);
    ++est.supports_evaluated;
  };

  if (mode == GricMode::exact_enumeration) {
    if (support_count(G, s) > options.support_cap)
      throw std::invalid_argument("gric: support count exceeds enumeration cap");
    // Lexicographic walk over all s-subsets of [G].
    std::vector<Index> support(size_t(s));
    for (Index i = 0; i < s; ++i) support[size_t(i)] = i;
    while (true) {
      record(support);
      Index i = s - 1;
      while (i >= 0 && support[size_t(i)] == G - s + i) --i;
      if (i < 0) break;
      ++support[size_t(i)];
      for (Index j = i + 1; j < s; ++j) support[size_t(j)] = support[size_t(j - 1)] + 1;
    }
  } else {
    if (trials == 0) throw std::invalid_argument("gric: monte_carlo needs trials >= 1");
    std::vector<Index> pool(size_t(G));
    for (Index i = 0; i < G; ++i) pool[size_t(i)] = i;
    for (std::uint64_t t = 0; t < trials; ++t) {
      Rng rng(seed, t);
      std::vector<Index> shuffled = pool;
      for (Index i = 0; i < s; ++i) {
        const auto j = i + Index(rng.below(std::uint64_t(G - i)));
        std::swap(shuffled[size_t(i)], shuffled[size_t(j)]);
      }
      shuffled.resize(size_t(s));
      record(shuffled);
    }
  }
  return est;
}

GripEstimate gric(const BlockDiagonalOperator& op, const GroupPartition& p, Index s,
                  GricMode mode, std::uint64_t trials, std::uint64_t seed,
                  const GricOptions& options) {
  return gric(op.materialize(), p, s, mode, trials, seed, options);
}

}  // namespace grip
