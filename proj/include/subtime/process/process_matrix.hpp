// Copyright 2026 The Subtime Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "subtime/qcore/operator.hpp"
#include "subtime/qcore/quantum.hpp"

namespace subtime::process {

using qcore::Channel;
using qcore::ComplexOperator;
using qcore::DensityMatrix;
using qcore::Matrix;

enum class Role { AIn, AOut, BIn, BOut };

enum class Order { AB, BA };

/// The canonical subsystem layout A_in (x) A_out (x) B_in (x) B_out.
inline constexpr std::array<Role, 4> kCanonicalRoles = {Role::AIn, Role::AOut,
                                                        Role::BIn, Role::BOut};

/**
 * Bipartite process matrix with a role label per subsystem.
 *
 * Construction only checks labeling; validity is a separate question answered
 * by validate_ocb, so invalid candidates (e.g. a zero matrix) can be held and
 * inspected.
 */
class ProcessMatrix {
 public:
  /// Throws DimensionError when the labels do not cover each role exactly once.
  ProcessMatrix(ComplexOperator w, std::vector<Role> roles);

  /// Canonical layout, labels implied.
  explicit ProcessMatrix(ComplexOperator w);

  const ComplexOperator& op() const noexcept { return w_; }
  const Matrix& matrix() const noexcept { return w_.matrix(); }
  const std::vector<Role>& roles() const noexcept { return roles_; }

  std::size_t index_of(Role r) const;
  std::size_t dim(Role r) const { return w_.dims()[index_of(r)]; }

  /// Same operator reordered into the canonical layout.
  ProcessMatrix canonical() const;

 private:
  ComplexOperator w_;
  std::vector<Role> roles_;
};

struct ValidityReport {
  double hermiticity_deviation = 0.0;
  double min_eigenvalue = 0.0;
  /// || Tr_{A_in,B_in}(W) - I_{A_out,B_out} || in spectral norm.
  double normalization_deviation = 0.0;
  /// || W - L(W) || where L projects onto the causally admissible subspace.
  double causal_deviation = 0.0;
  bool valid = false;
};

/**
 * Hermiticity, positivity and normalization of a process matrix.
 *
 * The process is read as a channel from the parties' outputs to their inputs,
 * so the normalization condition traces the ports the process writes into
 * (A_in, B_in) and compares against the identity on the ports it reads from
 * (A_out, B_out); this uses the same partial-trace check as a Choi matrix.
 * The causal-admissibility projection rules out loops that normalization
 * alone would accept.
 */
ValidityReport validate_ocb(const ProcessMatrix& w,
                            double tol = qcore::kDefaultTolerance);

/// Exchange the roles of A and B (A_in <-> B_in, A_out <-> B_out).
ProcessMatrix swap_parties(const ProcessMatrix& w);

/**
 * Definite-order process: the first party receives `first_input`, its output
 * is carried through `c` into the second party's input, and the second
 * party's output is discarded. Defaults to a maximally mixed first input.
 */
ProcessMatrix from_channel_order(const Channel& c, Order order,
                                 const std::optional<DensityMatrix>& first_input = {});

/**
 * Contract the parties' local operations into a process matrix.
 *
 * `w` holds A_in, A_out, B_in, B_out as its first four subsystems (canonical
 * order) followed by any number of future subsystems. Each local operation is
 * given by its Choi matrix (input port first). Returns the unnormalized
 * operator on the future subsystems, or a 1x1 probability if there are none.
 */
ComplexOperator contract_local(const ComplexOperator& w, const Matrix& alice_choi,
                               const Matrix& bob_choi);

/// State arriving at B_in when Alice applies `alice` and Bob's output is discarded.
DensityMatrix bob_input(const ProcessMatrix& w, const Channel& alice);

/// State arriving at A_in when Bob applies `bob` and Alice's output is discarded.
DensityMatrix alice_input(const ProcessMatrix& w, const Channel& bob);

/// Unit-trace reduced operator of `w` on a single role.
ComplexOperator marginal(const ProcessMatrix& w, Role r);

struct TwoWayReport {
  double forward_deviation = 0.0;  ///< || marginal_{B_in}(W_AB) - rho_B ||
  double reverse_deviation = 0.0;  ///< || marginal_{A_in}(W_BA) - rho_A ||
  double deviation = 0.0;          ///< max of the two
  bool holds = false;              ///< deviation <= tol
};

/// Two-way consistency: each orientation must deliver the given input marginal.
TwoWayReport check_two_way(const ProcessMatrix& w_ab, const ProcessMatrix& w_ba,
                           const DensityMatrix& rho_a, const DensityMatrix& rho_b,
                           double tol = qcore::kDefaultTolerance);

}  // namespace subtime::process
