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

#include <vector>

#include "subtime/qcore/operator.hpp"

namespace subtime::process {

/// Multi-step process: one operator per intervention, all with equal dims.
class ProcessTensor {
 public:
  explicit ProcessTensor(std::vector<qcore::ComplexOperator> steps);

  const std::vector<qcore::ComplexOperator>& steps() const noexcept { return steps_; }
  std::size_t size() const noexcept { return steps_.size(); }

  /// Step order reversed and every step conjugate-transposed.
  ProcessTensor reversed_adjoint() const;

 private:
  std::vector<qcore::ComplexOperator> steps_;
};

struct TensorDecomposition {
  ProcessTensor forward;  ///< T_+
  ProcessTensor reverse;  ///< T_-
  /// max_i || A_i || where A = (T - reversed_adjoint(T)) / 2; zero exactly
  /// when reverse == reversed_adjoint(forward).
  double duality_residual = 0.0;
};

/**
 * Split T into T_+ + T_- with time reversal realized as step-order reversal.
 *
 * With S = (T + R(T)) / 2 and A = (T - R(T)) / 2, where R reverses the step
 * order and takes adjoints, the split is T_- = S / 2 and T_+ = S / 2 + A.
 * Reconstruction is exact for every tensor; the duality T_- = R(T_+) holds
 * precisely when A vanishes, and the residual reports its size otherwise.
 */
TensorDecomposition decompose_process_tensor(const ProcessTensor& tens);

/// Largest entrywise-operator spectral norm of step-by-step differences.
double max_step_distance(const ProcessTensor& a, const ProcessTensor& b);

}  // namespace subtime::process
