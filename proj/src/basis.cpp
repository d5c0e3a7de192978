// Copyright 2026 The grip authors
// SPDX-License-Identifier: Apache-2.0

#include "grip/basis.hpp"

#include <Eigen/QR>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "grip/rng.hpp"

namespace grip {

std::string to_string(BasisKind kind) {
  switch (kind) {
    case BasisKind::identity: return "identity";
    case BasisKind::dft: return "dft";
    case BasisKind::block_diagonal_composite: return "block_diagonal_composite";
    case BasisKind::explicit_matrix: return "explicit";
  }
  return "unknown";
}

UnitaryBasis::UnitaryBasis(Eigen::MatrixXcd matrix, Eigen::Index sensors,
                           BasisKind kind)
    : matrix_(std::move(matrix)), sensors_(sensors), kind_(kind) {
  const Eigen::Index dim = matrix_.rows();
  if (dim <= 0 || matrix_.cols() != dim)
    throw std::invalid_argument("basis matrix must be square");
  if (sensors_ <= 0 || dim % sensors_ != 0)
    throw std::invalid_argument("sensor count must divide the basis dimension");
  const double defect =
      (matrix_.adjoint() * matrix_ - Eigen::MatrixXcd::Identity(dim, dim))
          .cwiseAbs()
          .maxCoeff();
  if (defect > unitarity_tolerance)
    throw std::invalid_argument("basis is not unitary (defect " +
                                std::to_string(defect) + ")");
}

UnitaryBasis UnitaryBasis::identity(Eigen::Index dim, Eigen::Index sensors) {
  return UnitaryBasis(Eigen::MatrixXcd::Identity(dim, dim), sensors,
                      BasisKind::identity);
}

UnitaryBasis UnitaryBasis::dft(Eigen::Index dim, Eigen::Index sensors) {
  Eigen::MatrixXcd f(dim, dim);
  const double scale = 1.0 / std::sqrt(double(dim));
  for (Eigen::Index m = 0; m < dim; ++m) {
    for (Eigen::Index n = 0; n < dim; ++n) {
      const double angle = 2.0 * std::numbers::pi * double(m) * double(n) / double(dim);
      f(m, n) = scale * std::complex<double>(std::cos(angle), std::sin(angle));
    }
  }
  return UnitaryBasis(std::move(f), sensors, BasisKind::dft);
}

UnitaryBasis UnitaryBasis::block_diagonal(const Eigen::MatrixXcd& sub,
                                          Eigen::Index sensors) {
  if (sub.rows() != sub.cols()) throw std::invalid_argument("sub-basis must be square");
  const Eigen::Index d = sub.rows();
  Eigen::MatrixXcd psi = Eigen::MatrixXcd::Zero(d * sensors, d * sensors);
  for (Eigen::Index l = 0; l < sensors; ++l)
    psi.block(l * d, l * d, d, d) = sub;
  return UnitaryBasis(std::move(psi), sensors, BasisKind::block_diagonal_composite);
}

UnitaryBasis UnitaryBasis::explicit_matrix(Eigen::MatrixXcd psi, Eigen::Index sensors) {
  return UnitaryBasis(std::move(psi), sensors, BasisKind::explicit_matrix);
}

UnitaryBasis UnitaryBasis::random_unitary(Eigen::Index dim, Eigen::Index sensors,
                                          std::uint64_t seed) {
  Rng rng(seed);
  Eigen::MatrixXcd gauss(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j) gauss(i, j) = rng.normal_complex();
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(gauss);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < dim; ++j) {
    const std::complex<double> rjj = r(j, j);
    const double mag = std::abs(rjj);
    if (mag > 0.0) q.col(j) *= rjj / mag;
  }
  return UnitaryBasis(std::move(q), sensors, BasisKind::explicit_matrix);
}

Eigen::Block<const Eigen::MatrixXcd> UnitaryBasis::partial_block(Eigen::Index l) const {
  if (l < 0 || l >= sensors_) throw std::invalid_argument("block index out of range");
  const Eigen::Index d = block_rows();
  return matrix_.middleRows(l * d, d);
}

Eigen::VectorXcd UnitaryBasis::apply(const Eigen::VectorXcd& x) const {
  if (x.size() != dim()) throw std::invalid_argument("basis apply: dimension mismatch");
  return matrix_ * x;
}

Eigen::VectorXcd UnitaryBasis::adjoint_apply(const Eigen::VectorXcd& z) const {
  if (z.size() != dim()) throw std::invalid_argument("basis adjoint: dimension mismatch");
  return matrix_.adjoint() * z;
}

Eigen::VectorXcd UnitaryBasis::partial_apply(Eigen::Index l,
                                             const Eigen::VectorXcd& x) const {
  if (x.size() != dim()) throw std::invalid_argument("basis apply: dimension mismatch");
  return partial_block(l) * x;
}

UnitaryBasis make_basis(BasisKind kind, Eigen::Index dim, Eigen::Index sensors,
                        const Eigen::MatrixXcd* payload) {
  switch (kind) {
    case BasisKind::identity:
      return UnitaryBasis::identity(dim, sensors);
    case BasisKind::dft:
      return UnitaryBasis::dft(dim, sensors);
    case BasisKind::block_diagonal_composite:
      if (payload == nullptr)
        throw std::invalid_argument("block-diagonal basis needs a sub-basis payload");
      return UnitaryBasis::block_diagonal(*payload, sensors);
    case BasisKind::explicit_matrix:
      if (payload == nullptr)
        throw std::invalid_argument("explicit basis needs a matrix payload");
      return UnitaryBasis::explicit_matrix(*payload, sensors);
  }
  throw std::invalid_argument("unknown basis kind");
}

}  // namespace grip
