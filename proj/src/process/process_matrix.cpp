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

#include "subtime/process/process_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <utility>

#include "subtime/qcore/kernels.hpp"
#include "subtime/qcore/linalg.hpp"

namespace subtime::process {

using qcore::DimensionError;
using qcore::Dims;
using qcore::ValidationError;

namespace {

constexpr std::size_t kAIn = 0, kAOut = 1, kBIn = 2, kBOut = 3;

// Replace the listed subsystems by Tr_X(W) (x) I_X / d_X.
Matrix trace_and_replace(const Matrix& w, const Dims& dims,
                         std::initializer_list<std::size_t> subsystems) {
  Matrix out = w;
  for (auto k : subsystems) out = qcore::kernels::parallel::depolarize(out, dims, k, 1.0);
  return out;
}

}  // namespace

ProcessMatrix::ProcessMatrix(ComplexOperator w, std::vector<Role> roles)
    : w_(std::move(w)), roles_(std::move(roles)) {
  if (roles_.size() != w_.subsystem_count()) {
    throw DimensionError("ProcessMatrix: " + std::to_string(w_.subsystem_count()) +
                         " subsystems but " + std::to_string(roles_.size()) +
                         " role labels");
  }
  for (auto r : kCanonicalRoles) {
    if (std::count(roles_.begin(), roles_.end(), r) != 1) {
      throw DimensionError("ProcessMatrix: each role must label exactly one subsystem");
    }
  }
}

ProcessMatrix::ProcessMatrix(ComplexOperator w)
    : ProcessMatrix(std::move(w),
                    std::vector<Role>(kCanonicalRoles.begin(), kCanonicalRoles.end())) {}

std::size_t ProcessMatrix::index_of(Role r) const {
  return static_cast<std::size_t>(std::find(roles_.begin(), roles_.end(), r) -
                                  roles_.begin());
}

ProcessMatrix ProcessMatrix::canonical() const {
  std::array<std::size_t, 4> perm{};
  for (std::size_t i = 0; i < 4; ++i) perm[i] = index_of(kCanonicalRoles[i]);
  if (perm == std::array<std::size_t, 4>{0, 1, 2, 3}) return *this;
  return ProcessMatrix(qcore::permute_subsystems(w_, perm));
}

ValidityReport validate_ocb(const ProcessMatrix& pm, double tol) {
  const ProcessMatrix w = pm.canonical();
  const Matrix& m = w.matrix();
  const Dims& dims = w.op().dims();

  ValidityReport report;
  report.hermiticity_deviation = qcore::hermiticity_deviation(m);
  report.min_eigenvalue = qcore::hermitian_eigenvalues(m).minCoeff();

  const std::size_t keep_outputs[] = {kAOut, kBOut};
  const Matrix reduced = qcore::kernels::parallel::partial_trace(m, dims, keep_outputs);
  report.normalization_deviation =
      qcore::spectral_norm(reduced - Matrix::Identity(reduced.rows(), reduced.cols()));

  const Matrix h = qcore::hermitian_part(m);
  const Matrix projected = trace_and_replace(h, dims, {kAOut}) +
                           trace_and_replace(h, dims, {kBOut}) -
                           trace_and_replace(h, dims, {kAOut, kBOut}) -
                           trace_and_replace(h, dims, {kBIn, kBOut}) +
                           trace_and_replace(h, dims, {kAOut, kBIn, kBOut}) -
                           trace_and_replace(h, dims, {kAIn, kAOut}) +
                           trace_and_replace(h, dims, {kAIn, kAOut, kBOut});
  report.causal_deviation = qcore::spectral_norm(h - projected);

  report.valid = report.hermiticity_deviation <= tol && report.min_eigenvalue >= -tol &&
                 report.normalization_deviation <= tol && report.causal_deviation <= tol;
  return report;
}

ProcessMatrix swap_parties(const ProcessMatrix& w) {
  const std::size_t perm[] = {kBIn, kBOut, kAIn, kAOut};
  return ProcessMatrix(qcore::permute_subsystems(w.canonical().op(), perm));
}

ProcessMatrix from_channel_order(const Channel& c, Order order,
                                 const std::optional<DensityMatrix>& first_input) {
  const std::size_t d = c.in_dim();
  if (c.out_dim() != d) {
    throw DimensionError("from_channel_order: channel must map a party's output "
                         "space onto an input space of the same dimension");
  }
  const DensityMatrix rho = first_input ? *first_input : DensityMatrix::maximally_mixed({d});
  if (rho.side() != d) {
    throw DimensionError("from_channel_order: first input has dimension " +
                         std::to_string(rho.side()) + ", parties have " +
                         std::to_string(d));
  }
  // Layout first_in, first_out, second_in, second_out.
  ComplexOperator w = qcore::tensor(
      qcore::tensor(rho.op().with_dims({d}), c.choi()),
      ComplexOperator::identity({d}));
  ProcessMatrix ab(std::move(w));
  return order == Order::AB ? ab : swap_parties(ab);
}

ComplexOperator contract_local(const ComplexOperator& w, const Matrix& alice_choi,
                               const Matrix& bob_choi) {
  const Dims& dims = w.dims();
  if (dims.size() < 4) throw DimensionError("contract_local: need at least 4 subsystems");
  if (static_cast<std::size_t>(alice_choi.rows()) != dims[kAIn] * dims[kAOut] ||
      static_cast<std::size_t>(bob_choi.rows()) != dims[kBIn] * dims[kBOut]) {
    throw DimensionError("contract_local: local operation does not match party ports");
  }
  Dims future(dims.begin() + 4, dims.end());
  const auto df = static_cast<Eigen::Index>(qcore::product(future));
  const Matrix local = qcore::kernels::parallel::kron(
      qcore::kernels::parallel::kron(alice_choi.transpose(), bob_choi.transpose()),
      Matrix::Identity(df, df));
  const Matrix joined = w.matrix() * local;
  std::vector<std::size_t> keep;
  for (std::size_t k = 4; k < dims.size(); ++k) keep.push_back(k);
  Matrix reduced = qcore::kernels::parallel::partial_trace(joined, dims, keep);
  return ComplexOperator(std::move(reduced), std::move(future));
}

namespace {

DensityMatrix received_state(const ProcessMatrix& pm, const Channel& sender,
                             bool alice_sends) {
  const ProcessMatrix w = pm.canonical();
  const Dims& dims = w.op().dims();
  const std::size_t s_in = alice_sends ? kAIn : kBIn;
  const std::size_t s_out = alice_sends ? kAOut : kBOut;
  const std::size_t r_in = alice_sends ? kBIn : kAIn;
  const std::size_t r_out = alice_sends ? kBOut : kAOut;
  if (sender.in_dim() != dims[s_in] || sender.out_dim() != dims[s_out]) {
    throw DimensionError("received_state: operation does not match sender ports");
  }
  const auto dr = static_cast<Eigen::Index>(dims[r_in] * dims[r_out]);
  Matrix local = alice_sends
                     ? qcore::kernels::parallel::kron(sender.choi().matrix().transpose(),
                                                      Matrix::Identity(dr, dr))
                     : qcore::kernels::parallel::kron(Matrix::Identity(dr, dr),
                                                      sender.choi().matrix().transpose());
  const std::size_t keep[] = {r_in};
  Matrix reduced = qcore::kernels::parallel::partial_trace(w.matrix() * local, dims, keep);
  const double tr = reduced.trace().real();
  if (!(std::abs(tr) > 1e-300)) throw ValidationError("received_state: zero-trace process");
  reduced /= tr;
  return DensityMatrix(ComplexOperator(qcore::hermitian_part(reduced), {dims[r_in]}));
}

}  // namespace

DensityMatrix bob_input(const ProcessMatrix& w, const Channel& alice) {
  return received_state(w, alice, true);
}

DensityMatrix alice_input(const ProcessMatrix& w, const Channel& bob) {
  return received_state(w, bob, false);
}

ComplexOperator marginal(const ProcessMatrix& w, Role r) {
  const std::size_t keep[] = {w.index_of(r)};
  ComplexOperator reduced = qcore::partial_trace(w.op(), keep);
  const auto tr = reduced.trace();
  if (!(std::abs(tr) > 1e-300)) throw ValidationError("marginal: zero-trace process");
  reduced *= 1.0 / tr;
  return reduced;
}

TwoWayReport check_two_way(const ProcessMatrix& w_ab, const ProcessMatrix& w_ba,
                           const DensityMatrix& rho_a, const DensityMatrix& rho_b,
                           double tol) {
  if (w_ab.dim(Role::BIn) != rho_b.side() || w_ba.dim(Role::AIn) != rho_a.side()) {
    throw DimensionError("check_two_way: marginal dimension mismatch");
  }
  TwoWayReport report;
  report.forward_deviation =
      qcore::spectral_norm(marginal(w_ab, Role::BIn).matrix() - rho_b.matrix());
  report.reverse_deviation =
      qcore::spectral_norm(marginal(w_ba, Role::AIn).matrix() - rho_a.matrix());
  report.deviation = std::max(report.forward_deviation, report.reverse_deviation);
  report.holds = report.deviation <= tol;
  return report;
}

}  // namespace subtime::process
