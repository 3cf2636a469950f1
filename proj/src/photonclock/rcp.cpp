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

#include "subtime/photonclock/rcp.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "subtime/qcore/linalg.hpp"

namespace subtime::photonclock {

using qcore::Complex;

namespace {

constexpr Complex kI{0.0, 1.0};

}  // namespace

RcpOperator::RcpOperator(ComplexOperator h_plus, ComplexOperator h_minus, double epsilon,
                         std::optional<ComplexOperator> damping)
    : h_plus_(std::move(h_plus)),
      h_minus_(std::move(h_minus)),
      damping_(damping ? std::move(*damping) : ComplexOperator::identity(h_plus_.dims())),
      epsilon_(epsilon) {
  if (h_plus_.dims() != h_minus_.dims() || h_plus_.dims() != damping_.dims()) {
    throw qcore::DimensionError("RcpOperator: generator dims differ");
  }
  if (!(epsilon >= 0.0)) throw qcore::ValidationError("RcpOperator: epsilon must be >= 0");
  constexpr double tol = 1e-12;
  if (qcore::hermiticity_deviation(h_plus_.matrix()) > tol ||
      qcore::hermiticity_deviation(h_minus_.matrix()) > tol) {
    throw qcore::ValidationError("RcpOperator: generators must be Hermitian");
  }
  if (qcore::hermiticity_deviation(damping_.matrix()) > tol ||
      qcore::hermitian_eigenvalues(damping_.matrix()).minCoeff() < -tol) {
    throw qcore::ValidationError("RcpOperator: damping operator must be PSD");
  }
}

RcpOperator RcpOperator::dual(const ComplexOperator& h, double epsilon) {
  return RcpOperator(h, h, epsilon);
}

Matrix RcpOperator::t_plus(double t) const {
  return 0.5 * qcore::expm(-kI * t * h_plus_.matrix());
}

Matrix RcpOperator::t_minus(double s) const {
  const Matrix k = h_minus_.matrix() + kI * epsilon_ * damping_.matrix();
  return 0.5 * qcore::expm(-kI * s * k);
}

Matrix RcpOperator::r(double t) const { return t_plus(t) + t_minus(-t).adjoint(); }

Vector rcp_apply(const RcpOperator& op, double t, const Vector& psi) {
  if (static_cast<std::size_t>(psi.size()) != op.dim()) {
    throw qcore::DimensionError("rcp_apply: state dimension mismatch");
  }
  return op.r(t) * psi;
}

InvariantReport rcp_invariant(const RcpOperator& op, const Vector& psi,
                              std::span<const double> ts, double tol) {
  if (ts.empty()) throw std::invalid_argument("rcp_invariant: empty time grid");
  const double reference = rcp_apply(op, 0.0, psi).squaredNorm();
  InvariantReport report;
  report.ts.assign(ts.begin(), ts.end());
  for (double t : ts) {
    const double v = rcp_apply(op, t, psi).squaredNorm();
    report.values.push_back(v);
    report.drift.push_back(reference - v);
    report.max_drift = std::max(report.max_drift, std::abs(reference - v));
  }
  const auto [lo, hi] = std::minmax_element(report.values.begin(), report.values.end());
  report.spread = *hi - *lo;
  report.constant = report.spread < tol;
  return report;
}

double duality_residual(const RcpOperator& op, std::span<const double> ts) {
  double worst = 0.0;
  for (double t : ts) {
    worst = std::max(worst, qcore::spectral_norm(op.t_minus(-t).adjoint() - op.t_plus(t)));
  }
  return worst;
}

}  // namespace subtime::photonclock
