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

#include <optional>
#include <span>
#include <vector>

#include "subtime/qcore/operator.hpp"

namespace subtime::photonclock {

using qcore::ComplexOperator;
using qcore::Matrix;
using qcore::Vector;

/**
 * R(t) = T_+(t) + T_-(-t)^dagger built from stored generators.
 *
 *   T_+(t) = exp(-i H_+ t) / 2
 *   T_-(s) = exp(-i (H_- + i eps G) s) / 2
 *
 * so that T_-(-t)^dagger = exp((-i H_- - eps G) t) / 2 is damped for t > 0.
 * With eps = 0 and H_- = H_+ the two halves coincide and R(t) is unitary.
 * G defaults to the identity.
 */
class RcpOperator {
 public:
  /// Throws ValidationError for non-Hermitian generators, a non-PSD damping
  /// operator or eps < 0; DimensionError for mismatched dims.
  RcpOperator(ComplexOperator h_plus, ComplexOperator h_minus, double epsilon,
              std::optional<ComplexOperator> damping = std::nullopt);

  /// Dagger-dual pair: H_- = H_+.
  static RcpOperator dual(const ComplexOperator& h, double epsilon);

  Matrix t_plus(double t) const;
  Matrix t_minus(double s) const;
  Matrix r(double t) const;

  const ComplexOperator& h_plus() const noexcept { return h_plus_; }
  const ComplexOperator& h_minus() const noexcept { return h_minus_; }
  const ComplexOperator& damping() const noexcept { return damping_; }
  double epsilon() const noexcept { return epsilon_; }
  std::size_t dim() const noexcept { return h_plus_.side(); }

 private:
  ComplexOperator h_plus_;
  ComplexOperator h_minus_;
  ComplexOperator damping_;
  double epsilon_;
};

/// R(t) psi, unnormalized. Throws DimensionError on a size mismatch.
Vector rcp_apply(const RcpOperator& op, double t, const Vector& psi);

struct InvariantReport {
  std::vector<double> ts;
  std::vector<double> values;  ///< <psi| R(t)^dagger R(t) |psi>
  std::vector<double> drift;   ///< value(0) - value(t): loss of norm relative to t = 0
  double spread = 0.0;         ///< max - min of values
  double max_drift = 0.0;      ///< max |drift|
  bool constant = false;       ///< spread < tol
};

InvariantReport rcp_invariant(const RcpOperator& op, const Vector& psi,
                              std::span<const double> ts, double tol = 1e-10);

/// max_t || T_-(-t)^dagger - T_+(t) || over the grid.
double duality_residual(const RcpOperator& op, std::span<const double> ts);

}  // namespace subtime::photonclock
