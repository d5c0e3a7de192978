// Copyright 2026 The grip authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GRIP_COHERENCE_HPP
#define GRIP_COHERENCE_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "grip/basis.hpp"
#include "grip/group_partition.hpp"

namespace grip {

/// Basis/partition coherence parameters.
///
/// mu = min(sqrt(d) * max_i ||psi_i||_{I,inf}, 1), over the D rows psi_i.
/// omega = min(sqrt(g) * max_i ||Vt(e_i)||_op,
///             sqrt(L) * max_{l,i} ||(Psi_l)_{I_i}||_op),
/// the shared-block analogue built from the lifted unit vectors and the
/// column-restricted partial blocks. branch records which argument of the
/// min attained it (0 = first, 1 = second/clamp).
struct CoherenceReport {
  double mu = 0.0;
  int mu_branch = 0;
  std::optional<double> omega;
  int omega_branch = 0;

  nlohmann::json to_json() const;
};

/// Exact evaluation of mu over all rows. mu is always in (0, 1].
CoherenceReport coherence_mu(const UnitaryBasis& basis, const GroupPartition& p);

/// Evaluates both omega branches via singular values of the D lifted L x d
/// matrices and the L*G column-restricted submatrices; also fills mu.
CoherenceReport coherence_omega(const UnitaryBasis& basis, const GroupPartition& p);

}  // namespace grip

#endif  // GRIP_COHERENCE_HPP
