// Copyright 2026 The grip authors
// SPDX-License-Identifier: Apache-2.0

#include "grip/coherence.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <stdexcept>

#include "grip/group_norms.hpp"
#include "grip/lifting.hpp"

namespace grip {

namespace {

void check_dims(const UnitaryBasis& basis, const GroupPartition& p) {
  if (p.ambient_dim() != basis.dim())
    throw std::invalid_argument("partition does not match basis dimension");
}

double opnorm(const Eigen::MatrixXcd& m) {
  // Dimensions here are at most L x d or d x g; a full SVD is exact and cheap.
  return Eigen::JacobiSVD<Eigen::MatrixXcd>(m).singularValues()(0);
}

}  // namespace

nlohmann::json CoherenceReport::to_json() const {
  nlohmann::json j{{"mu", mu}, {"mu_branch", mu_branch}};
  if (omega) {
    j["omega"] = *omega;
    j["omega_branch"] = omega_branch;
  }
  return j;
}

CoherenceReport coherence_mu(const UnitaryBasis& basis, const GroupPartition& p) {
  check_dims(basis, p);
  const Eigen::Index dim = basis.dim();
  double max_row = 0.0;
  for (Eigen::Index i = 0; i < dim; ++i) {
    const Eigen::VectorXcd row = basis.matrix().row(i).transpose();
    max_row = std::max(max_row, group_norm(row, p, group_norm_infinity));
  }
  const double raw = std::sqrt(double(basis.block_rows())) * max_row;
  CoherenceReport report;
  report.mu = std::min(raw, 1.0);
  report.mu_branch = raw < 1.0 ? 0 : 1;
  return report;
}

CoherenceReport coherence_omega(const UnitaryBasis& basis, const GroupPartition& p) {
  CoherenceReport report = coherence_mu(basis, p);
  const Eigen::Index dim = basis.dim();
  const Eigen::Index sensors = basis.sensors();

  double max_lift = 0.0;
  for (Eigen::Index i = 0; i < dim; ++i) {
    Eigen::VectorXcd e = Eigen::VectorXcd::Zero(dim);
    e(i) = 1.0;
    max_lift = std::max(max_lift, opnorm(lift_V_tilde(basis, e)));
  }
  const double first = std::sqrt(double(p.max_group_size())) * max_lift;

  double max_sub = 0.0;
  for (Eigen::Index l = 0; l < sensors; ++l) {
    const auto block = basis.partial_block(l);
    for (Eigen::Index gi = 0; gi < p.group_count(); ++gi) {
      const auto& group = p.group(gi);
      Eigen::MatrixXcd sub(block.rows(), Eigen::Index(group.size()));
      for (std::size_t c = 0; c < group.size(); ++c)
        sub.col(Eigen::Index(c)) = block.col(group[c]);
      max_sub = std::max(max_sub, opnorm(sub));
    }
  }
  const double second = std::sqrt(double(sensors)) * max_sub;

  report.omega = std::min(first, second);
  report.omega_branch = first <= second ? 0 : 1;
  return report;
}

}  // namespace grip
