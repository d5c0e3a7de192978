// Copyright 2026 The grip authors
// SPDX-License-Identifier: Apache-2.0

#include "grip/sensing.hpp"

#include <cmath>
#include <stdexcept>

#include "grip/rng.hpp"

namespace grip {

std::string to_string(BlockMode mode) {
  return mode == BlockMode::independent ? "independent" : "shared";
}

std::string to_string(SubgaussianFamily family) {
  return family == SubgaussianFamily::gaussian ? "gaussian" : "rademacher";
}

namespace {

void validate_blocks(const std::vector<Eigen::MatrixXd>& blocks,
                     const UnitaryBasis& basis, Eigen::Index expected_count) {
  if (Eigen::Index(blocks.size()) != expected_count)
    throw std::invalid_argument("wrong number of sensor blocks");
  if (blocks.empty()) throw std::invalid_argument("operator needs at least one block");
  const Eigen::Index m = blocks.front().rows();
  for (const auto& b : blocks) {
    if (b.rows() != m || b.cols() != basis.block_rows())
      throw std::invalid_argument("all blocks must be m x d with d = D/L");
  }
  if (m <= 0) throw std::invalid_argument("blocks must have at least one row");
}

Eigen::MatrixXd draw_block(Rng& rng, Eigen::Index m, Eigen::Index d,
                           SubgaussianFamily family) {
  Eigen::MatrixXd block(m, d);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < d; ++j)
      block(i, j) = family == SubgaussianFamily::gaussian ? rng.normal()
                                                          : rng.rademacher();
  return block;
}

}  // namespace

BlockDiagonalOperator::BlockDiagonalOperator(std::vector<Eigen::MatrixXd> blocks,
                                             UnitaryBasis basis, double scale)
    : blocks_(std::move(blocks)),
      mode_(BlockMode::independent),
      basis_(std::move(basis)),
      scale_(scale) {
  validate_blocks(blocks_, basis_, basis_.sensors());
  block_rows_ = blocks_.front().rows();
}

BlockDiagonalOperator::BlockDiagonalOperator(Eigen::MatrixXd shared_block,
                                             UnitaryBasis basis, double scale)
    : blocks_{std::move(shared_block)},
      mode_(BlockMode::shared),
      basis_(std::move(basis)),
      scale_(scale) {
  validate_blocks(blocks_, basis_, 1);
  block_rows_ = blocks_.front().rows();
}

BlockDiagonalOperator BlockDiagonalOperator::draw(const SubgaussianEnsemble& ens,
                                                  Eigen::Index m, Eigen::Index d,
                                                  Eigen::Index sensors, BlockMode mode,
                                                  UnitaryBasis basis, double scale) {
  if (m < 1 || d < 1 || sensors < 1)
    throw std::invalid_argument("operator dimensions must be positive");
  if (basis.dim() != d * sensors || basis.sensors() != sensors)
    throw std::invalid_argument("basis dimensions do not match the operator");
  if (scale < 0.0) scale = 1.0 / std::sqrt(double(m));

  Rng rng(ens.seed);
  if (mode == BlockMode::shared) {
    BlockDiagonalOperator op(draw_block(rng, m, d, ens.family), std::move(basis), scale);
    op.seed_ = ens.seed;
    op.family_ = ens.family;
    return op;
  }
  std::vector<Eigen::MatrixXd> blocks;
  blocks.reserve(size_t(sensors));
  for (Eigen::Index l = 0; l < sensors; ++l)
    blocks.push_back(draw_block(rng, m, d, ens.family));
  BlockDiagonalOperator op(std::move(blocks), std::move(basis), scale);
  op.seed_ = ens.seed;
  op.family_ = ens.family;
  return op;
}

const Eigen::MatrixXd& BlockDiagonalOperator::block(Eigen::Index l) const {
  if (l < 0 || l >= sensors()) throw std::invalid_argument("block index out of range");
  return mode_ == BlockMode::shared ? blocks_.front() : blocks_[size_t(l)];
}

Eigen::VectorXcd BlockDiagonalOperator::apply(const Eigen::VectorXcd& x) const {
  if (x.size() != cols()) throw std::invalid_argument("apply: dimension mismatch");
  Eigen::VectorXcd y(rows());
  for (Eigen::Index l = 0; l < sensors(); ++l)
    y.segment(l * block_rows_, block_rows_) =
        scale_ * (block(l) * basis_.partial_apply(l, x));
  return y;
}

Eigen::VectorXcd BlockDiagonalOperator::adjoint_apply(const Eigen::VectorXcd& y) const {
  if (y.size() != rows()) throw std::invalid_argument("adjoint: dimension mismatch");
  Eigen::VectorXcd x = Eigen::VectorXcd::Zero(cols());
  for (Eigen::Index l = 0; l < sensors(); ++l) {
    const Eigen::VectorXcd t =
        block(l).transpose() * y.segment(l * block_rows_, block_rows_);
    x.noalias() += basis_.partial_block(l).adjoint() * t;
  }
  return scale_ * x;
}

std::pair<Eigen::VectorXcd, Eigen::VectorXcd> BlockDiagonalOperator::measure(
    const Eigen::VectorXcd& x, double noise_level, std::uint64_t seed) const {
  if (noise_level < 0.0) throw std::invalid_argument("noise level must be nonnegative");
  Eigen::VectorXcd e = Eigen::VectorXcd::Zero(rows());
  if (noise_level > 0.0) {
    Rng rng(seed);
    for (Eigen::Index i = 0; i < e.size(); ++i) e(i) = rng.normal_complex();
    e *= noise_level / e.norm();
  }
  Eigen::VectorXcd y = apply(x) + e;
  return {std::move(y), std::move(e)};
}

Eigen::MatrixXcd BlockDiagonalOperator::materialize(std::size_t max_entries) const {
  const std::size_t entries = std::size_t(rows()) * std::size_t(cols());
  if (entries > max_entries)
    throw std::invalid_argument("materialize: size cap exceeded");
  Eigen::MatrixXcd dense = Eigen::MatrixXcd::Zero(rows(), cols());
  for (Eigen::Index l = 0; l < sensors(); ++l)
    dense.middleRows(l * block_rows_, block_rows_) =
        scale_ * (block(l) * basis_.partial_block(l));
  return dense;
}

nlohmann::json BlockDiagonalOperator::descriptor() const {
  return {{"mode", to_string(mode_)},
          {"m", block_rows_},
          {"d", block_cols()},
          {"L", sensors()},
          {"seed", seed_},
          {"family", to_string(family_)},
          {"scale", scale_}};
}

}  // namespace grip
