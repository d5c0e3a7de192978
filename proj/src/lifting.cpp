// Copyright 2026 The grip authors
// SPDX-License-Identifier: Apache-2.0

#include "grip/lifting.hpp"

#include <stdexcept>

namespace grip {

double lift_opnorm_V(const UnitaryBasis& basis, const Eigen::VectorXcd& x) {
  if (x.size() != basis.dim())
    throw std::invalid_argument("lift_opnorm_V: dimension mismatch");
  double best = 0.0;
  for (Eigen::Index l = 0; l < basis.sensors(); ++l)
    best = std::max(best, basis.partial_apply(l, x).norm());
  return best;
}

Eigen::MatrixXcd lift_V_tilde(const UnitaryBasis& basis, const Eigen::VectorXcd& x) {
  if (x.size() != basis.dim())
    throw std::invalid_argument("lift_V_tilde: dimension mismatch");
  Eigen::MatrixXcd vt(basis.sensors(), basis.block_rows());
  for (Eigen::Index l = 0; l < basis.sensors(); ++l)
    vt.row(l) = basis.partial_apply(l, x).transpose();
  return vt;
}

Eigen::MatrixXcd build_lifted_dense(const UnitaryBasis& basis, const Eigen::VectorXcd& x,
                                    Eigen::Index m, std::size_t max_entries) {
  if (m < 1) throw std::invalid_argument("block multiplicity must be positive");
  const Eigen::Index L = basis.sensors();
  const Eigen::Index d = basis.block_rows();
  const std::size_t entries = std::size_t(m) * std::size_t(L) * std::size_t(m) *
                              std::size_t(d) * std::size_t(L);
  if (entries > max_entries)
    throw std::invalid_argument("build_lifted_dense: size cap exceeded");

  Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(m * L, m * d * L);
  for (Eigen::Index l = 0; l < L; ++l) {
    const Eigen::VectorXcd row = basis.partial_apply(l, x);
    for (Eigen::Index i = 0; i < m; ++i)
      v.block(l * m + i, (l * m + i) * d, 1, d) = row.transpose();
  }
  return v;
}

double factorization_check(const BlockDiagonalOperator& op, const Eigen::VectorXcd& x,
                           std::size_t max_entries) {
  const Eigen::Index m = op.block_rows();
  const Eigen::Index d = op.block_cols();
  const Eigen::Index L = op.sensors();

  // xi stacks the rows of Phi_1, ..., Phi_L.
  Eigen::VectorXcd xi(m * d * L);
  for (Eigen::Index l = 0; l < L; ++l)
    for (Eigen::Index i = 0; i < m; ++i)
      xi.segment(l * m * d + i * d, d) = op.block(l).row(i).transpose();

  const Eigen::MatrixXcd v = build_lifted_dense(op.basis(), x, m, max_entries);
  const Eigen::VectorXcd lhs = op.apply(x);
  const Eigen::VectorXcd rhs = op.scale() * (v * xi);
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

}  // namespace grip
