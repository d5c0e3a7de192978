// Copyright 2026 The grip authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GRIP_SENSING_HPP
#define GRIP_SENSING_HPP

#include <Eigen/Core>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "grip/basis.hpp"

namespace grip {

enum class BlockMode { independent, shared };
enum class SubgaussianFamily { gaussian, rademacher };

std::string to_string(BlockMode mode);
std::string to_string(SubgaussianFamily family);

/// Which zero-mean unit-variance entry distribution populates the blocks,
/// plus the seed that makes the draw reproducible. The subgaussian norm of
/// the family is a documented label, not something this library estimates:
/// Rademacher entries have the smallest possible one, Gaussians a slightly
/// larger universal constant.
struct SubgaussianEnsemble {
  SubgaussianFamily family = SubgaussianFamily::gaussian;
  std::uint64_t seed = 0;
};

/// The measurement map x -> scale * diag(Phi_1, ..., Phi_L) * Psi * x with
/// real m x d blocks Phi_l. In shared mode every sensor applies the same
/// block, which is handled as one stored matrix rather than L copies.
/// Matvecs work blockwise; the full M x D matrix is only ever formed by
/// materialize(), which is guarded by an entry cap.
class BlockDiagonalOperator {
 public:
  /// Independent blocks, one per sensor.
  BlockDiagonalOperator(std::vector<Eigen::MatrixXd> blocks, UnitaryBasis basis,
                        double scale);

  /// Shared block applied by all L sensors (L comes from the basis).
  BlockDiagonalOperator(Eigen::MatrixXd shared_block, UnitaryBasis basis, double scale);

  /// Draws the blocks from the ensemble. Entries are generated row-major,
  /// blocks in sensor order, from a single Philox stream keyed by ens.seed;
  /// shared mode draws one block (m*d entries), independent mode L of them.
  /// The default scale 1/sqrt(m) makes the composite an isometry in
  /// expectation; pass scale = 1 for the unnormalized operator.
  static BlockDiagonalOperator draw(const SubgaussianEnsemble& ens, Eigen::Index m,
                                    Eigen::Index d, Eigen::Index sensors,
                                    BlockMode mode, UnitaryBasis basis,
                                    double scale = -1.0);

  Eigen::Index rows() const { return block_rows_ * sensors(); }   // M = mL
  Eigen::Index cols() const { return basis_.dim(); }              // D = dL
  Eigen::Index block_rows() const { return block_rows_; }         // m
  Eigen::Index block_cols() const { return basis_.block_rows(); }  // d
  Eigen::Index sensors() const { return basis_.sensors(); }       // L
  BlockMode mode() const { return mode_; }
  double scale() const { return scale_; }
  const UnitaryBasis& basis() const { return basis_; }
  const Eigen::MatrixXd& block(Eigen::Index l) const;

  /// y with y^l = scale * Phi_l * (Psi_l x); never forms the dense product.
  Eigen::VectorXcd apply(const Eigen::VectorXcd& x) const;

  /// scale * Psi^H A^T y, computed blockwise; adjoint of apply() under the
  /// conjugate pairing <apply(x), y> = <x, adjoint_apply(y)>.
  Eigen::VectorXcd adjoint_apply(const Eigen::VectorXcd& y) const;

  /// Noisy measurement y = apply(x) + e where e is a uniformly random
  /// direction scaled to ||e||_2 = noise_level exactly. Returns (y, e).
  std::pair<Eigen::VectorXcd, Eigen::VectorXcd> measure(const Eigen::VectorXcd& x,
                                                        double noise_level,
                                                        std::uint64_t seed) const;

  /// Dense scale * A * Psi. Throws if rows*cols exceeds max_entries.
  Eigen::MatrixXcd materialize(std::size_t max_entries = default_entry_cap) const;

  nlohmann::json descriptor() const;

  static constexpr std::size_t default_entry_cap = 10'000'000;

 private:
  std::vector<Eigen::MatrixXd> blocks_;  // one entry in shared mode
  BlockMode mode_;
  UnitaryBasis basis_;
  double scale_;
  Eigen::Index block_rows_;
  std::uint64_t seed_ = 0;
  SubgaussianFamily family_ = SubgaussianFamily::gaussian;
};

}  // namespace grip

#endif  // GRIP_SENSING_HPP
