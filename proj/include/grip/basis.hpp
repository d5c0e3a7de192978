// Copyright 2026 The grip authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GRIP_BASIS_HPP
#define GRIP_BASIS_HPP

#include <Eigen/Core>

#include <cstdint>
#include <string>

namespace grip {

enum class BasisKind { identity, dft, block_diagonal_composite, explicit_matrix };

std::string to_string(BasisKind kind);

/// A D x D unitary sparsity basis split into L row blocks of d = D/L rows
/// each. Unitarity is enforced at construction to 1e-10 in the max-entry
/// norm of Psi^H Psi - I; every downstream identity inherits that floor.
///
/// Real orthogonal bases are just the special case with zero imaginary part.
class UnitaryBasis {
 public:
  static UnitaryBasis identity(Eigen::Index dim, Eigen::Index sensors);

  /// Discrete Fourier basis with entries exp(+i 2 pi m n / D) / sqrt(D).
  static UnitaryBasis dft(Eigen::Index dim, Eigen::Index sensors);

  /// diag(sub, ..., sub) with `sensors` copies of a d x d unitary block.
  static UnitaryBasis block_diagonal(const Eigen::MatrixXcd& sub, Eigen::Index sensors);

  /// Arbitrary matrix, validated for unitarity.
  static UnitaryBasis explicit_matrix(Eigen::MatrixXcd psi, Eigen::Index sensors);

  /// Householder-QR orthonormalization of a seeded complex Gaussian matrix,
  /// with column phases fixed so the result is Haar distributed.
  static UnitaryBasis random_unitary(Eigen::Index dim, Eigen::Index sensors,
                                     std::uint64_t seed);

  Eigen::Index dim() const { return matrix_.rows(); }           // D
  Eigen::Index sensors() const { return sensors_; }             // L
  Eigen::Index block_rows() const { return dim() / sensors_; }  // d
  BasisKind kind() const { return kind_; }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }

  /// Rows l*d .. (l+1)*d - 1; stacking all L blocks reproduces the matrix.
  Eigen::Block<const Eigen::MatrixXcd> partial_block(Eigen::Index l) const;

  Eigen::VectorXcd apply(const Eigen::VectorXcd& x) const;          // Psi x
  Eigen::VectorXcd adjoint_apply(const Eigen::VectorXcd& z) const;  // Psi^H z
  Eigen::VectorXcd partial_apply(Eigen::Index l, const Eigen::VectorXcd& x) const;

  static constexpr double unitarity_tolerance = 1e-10;

 private:
  UnitaryBasis(Eigen::MatrixXcd matrix, Eigen::Index sensors, BasisKind kind);

  Eigen::MatrixXcd matrix_;
  Eigen::Index sensors_;
  BasisKind kind_;
};

/// Dispatching constructor used by the CLI and config loaders. `payload`
/// is required for the explicit and block-diagonal kinds and ignored
/// otherwise.
UnitaryBasis make_basis(BasisKind kind, Eigen::Index dim, Eigen::Index sensors,
                        const Eigen::MatrixXcd* payload = nullptr);

}  // namespace grip

#endif  // GRIP_BASIS_HPP
