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

#include <span>
#include <vector>

#include "subtime/process/process_matrix.hpp"

namespace subtime::process {

using qcore::Vector;

/**
 * Quantum switch over two unitaries of equal dimension.
 *
 * Joint states are ordered target (x) control. Control |0> applies
 * u_b * u_a (A first), control |1> applies u_a * u_b (B first).
 */
class SwitchModel {
 public:
  /// Throws ValidationError for non-unitary or mismatched inputs.
  SwitchModel(Matrix u_a, Matrix u_b);

  std::size_t target_dim() const noexcept { return static_cast<std::size_t>(u_a_.rows()); }
  const Matrix& u_a() const noexcept { return u_a_; }
  const Matrix& u_b() const noexcept { return u_b_; }

  /// Unitary for a definite control value (0: A then B, 1: B then A).
  Matrix order_unitary(int control) const;

  /// |0><0| branch (x) U_0 + |1><1| branch (x) U_1 on target (x) control.
  Matrix controlled_unitary() const;

  DensityMatrix output(const DensityMatrix& target, const DensityMatrix& control) const;

  /// Probability of finding the output control in state `outcome`.
  double control_probability(const DensityMatrix& target, const DensityMatrix& control,
                             const Vector& outcome) const;

  /**
   * Full switch process on A_in, A_out, B_in, B_out, F_t, F_c with the target
   * and control inputs built in. Contracting local operations u_a, u_b with
   * contract_local reproduces output(target, control).
   */
  ComplexOperator full_process(const DensityMatrix& target, const DensityMatrix& control) const;

  /// full_process with the future target and control traced out.
  ProcessMatrix traced_process(const DensityMatrix& target, const DensityMatrix& control) const;

 private:
  Matrix u_a_;
  Matrix u_b_;
};

SwitchModel build_quantum_switch(const Matrix& u_a, const Matrix& u_b);

struct ComparisonReport {
  double noise = 0.0;
  int steps = 0;
  /// Joint target+control entropy in bits after 0..steps steps.
  std::vector<double> ac_entropy;
  std::vector<double> ico_entropy;
  double ac_final = 0.0;
  double ico_final = 0.0;
};

/**
 * Entropy growth of alternating versus superposed causal order.
 *
 * Both runs start from target |0> and control |+> and apply local
 * depolarizing noise of strength `noise` to each qubit after every step.
 * AC: strict alternation u_b u_a, u_a u_b, ... on the target with the control
 * idle. ICO: one quantum-switch application per step.
 */
ComparisonReport ac_vs_ico_entropy(const Matrix& u_a, const Matrix& u_b, double noise,
                                   int steps);

/// ac_vs_ico_entropy over independent noise levels, in parallel.
std::vector<ComparisonReport> ac_vs_ico_sweep(const Matrix& u_a, const Matrix& u_b,
                                              std::span<const double> noises, int steps);

}  // namespace subtime::process
