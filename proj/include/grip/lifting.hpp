// Copyright 2026 The grip authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GRIP_LIFTING_HPP
#define GRIP_LIFTING_HPP

#include <Eigen/Core>

#include "grip/basis.hpp"
#include "grip/sensing.hpp"

namespace grip {

// The lifted view of the sensing map: for fixed x, A Psi x is a linear
// function of the stacked block entries xi, A Psi x = V(x) xi, where V(x) is
// block diagonal with blocks V_l(x) = I_m (x) (Psi_l x)^T. Everything below
// evaluates norms and entries of that lift without drawing any randomness.

/// Operator norm of V(x), computed as max_l ||Psi_l x||_2 (each block of the
/// lift is a Kronecker stack of one row, so its spectral norm is that row's
/// Euclidean length).
double lift_opnorm_V(const UnitaryBasis& basis, const Eigen::VectorXcd& x);

/// The L x d matrix with row l equal to (Psi_l x)^T. Its m-fold diagonal
/// repetition plays the role of V(x) when all sensors share one block.
Eigen::MatrixXcd lift_V_tilde(const UnitaryBasis& basis, const Eigen::VectorXcd& x);

/// Dense V(x) with block multiplicity m: an (mL) x (mdL) matrix. Desk-scale
/// oracle used by tests and factorization_check; guarded by an entry cap.
Eigen::MatrixXcd build_lifted_dense(const UnitaryBasis& basis, const Eigen::VectorXcd& x,
                                    Eigen::Index m,
                                    std::size_t max_entries =
                                        BlockDiagonalOperator::default_entry_cap);

/// Stacks the rows of the operator's blocks into the vector xi that realizes
/// A Psi x = V(x) xi, evaluates both sides, and returns the max-abs deviation
/// (which should sit at rounding level, <= 1e-10, for any x).
double factorization_check(const BlockDiagonalOperator& op, const Eigen::VectorXcd& x,
                           std::size_t max_entries =
                               BlockDiagonalOperator::default_entry_cap);

}  // namespace grip

#endif  // GRIP_LIFTING_HPP
