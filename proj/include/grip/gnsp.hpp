// Copyright 2026 The grip authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GRIP_GNSP_HPP
#define GRIP_GNSP_HPP

#include <Eigen/Core>

#include <cstdint>
#include <vector>

#include "grip/group_partition.hpp"

namespace grip {

/// A vector violating the order-s robust group null space inequality
///   ||v_{I_S}||_2 <= rho/sqrt(s) * ||v_{I_{S^c}}||_{I,1} + tau * ||A v||_2
/// for S the s largest groups of v (the binding choice of S: it maximizes
/// the left side and minimizes the complement term simultaneously).
struct GnspViolation {
  Eigen::VectorXcd v;
  double lhs;
  double rhs;
};

/// Randomized search for violations. Candidates cycle through dense complex
/// Gaussian vectors, group-sparse vectors, and directions projected onto the
/// (numerical) null space of A — that last family matters because genuine
/// violations of a null space property live in the null space, where plain
/// random sampling essentially never lands. An empty result is evidence of
/// the property, not a certificate.
std::vector<GnspViolation> gnsp_falsify(const Eigen::MatrixXcd& a,
                                        const GroupPartition& p, Index s, double rho,
                                        double tau, std::uint64_t trials,
                                        std::uint64_t seed);

struct DisjointSupportReport {
  double max_ratio = 0.0;        // largest |<Au, Aw>| relative to the bound
  std::uint64_t pairs_tested = 0;
  bool clamped = false;          // delta^2 < t^2 occurred (delta under-computed)
};

/// Checks the disjoint-support correlation bound behind the GRIP-to-GNSP
/// implication: for u, w unit-normalized on disjoint s-group supports and
/// ||Au||^2 = (1+t)||u||^2, the magnitude |<Au, Aw>| (conjugate pairing) is
/// at most sqrt(delta^2 - t^2) where delta is the exact order-2s constant.
/// trials = 0 sweeps all disjoint support pairs exhaustively; otherwise each
/// trial samples one pair. vectors_per_pair unit vectors are drawn per pair.
DisjointSupportReport disjoint_support_check(const Eigen::MatrixXcd& a,
                                             const GroupPartition& p, Index s,
                                             double delta, std::uint64_t trials,
                                             std::uint64_t seed,
                                             int vectors_per_pair = 4);

}  // namespace grip

#endif  // GRIP_GNSP_HPP
