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

#include "subtime/process/quantum_switch.hpp"

#include <exception>
#include <stdexcept>
#include <utility>

#include "subtime/qcore/linalg.hpp"

namespace subtime::process {

using qcore::Dims;
using qcore::ValidationError;

SwitchModel::SwitchModel(Matrix u_a, Matrix u_b) : u_a_(std::move(u_a)), u_b_(std::move(u_b)) {
  if (u_a_.rows() != u_b_.rows() || u_a_.cols() != u_b_.cols()) {
    throw qcore::DimensionError("SwitchModel: unitaries differ in dimension");
  }
  if (!qcore::is_unitary(u_a_) || !qcore::is_unitary(u_b_)) {
    throw ValidationError("SwitchModel: non-unitary input");
  }
  if (u_a_.rows() < 2) throw qcore::DimensionError("SwitchModel: target dimension below 2");
}

Matrix SwitchModel::order_unitary(int control) const {
  return control == 0 ? Matrix(u_b_ * u_a_) : Matrix(u_a_ * u_b_);
}

Matrix SwitchModel::controlled_unitary() const {
  Matrix p0 = Matrix::Zero(2, 2), p1 = Matrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  p1(1, 1) = 1.0;
  return qcore::kron({order_unitary(0), p0}) + qcore::kron({order_unitary(1), p1});
}

DensityMatrix SwitchModel::output(const DensityMatrix& target,
                                  const DensityMatrix& control) const {
  if (target.side() != target_dim() || control.side() != 2) {
    throw qcore::DimensionError("SwitchModel::output: state dimension mismatch");
  }
  const Matrix u = controlled_unitary();
  const Matrix joint = qcore::kron({target.matrix(), control.matrix()});
  return DensityMatrix(ComplexOperator(u * joint * u.adjoint(), {target_dim(), 2}));
}

double SwitchModel::control_probability(const DensityMatrix& target,
                                        const DensityMatrix& control,
                                        const Vector& outcome) const {
  const ComplexOperator reduced = qcore::partial_trace(output(target, control).op(), {1});
  const Vector e = outcome / outcome.norm();
  return (e.adjoint() * reduced.matrix() * e)(0, 0).real();
}

ComplexOperator SwitchModel::full_process(const DensityMatrix& target,
                                          const DensityMatrix& control) const {
  const std::size_t d = target_dim();
  if (target.side() != d || control.side() != 2) {
    throw qcore::DimensionError("SwitchModel::full_process: state dimension mismatch");
  }
  const auto n = static_cast<Eigen::Index>(d);
  Vector phi = Vector::Zero(n * n);
  for (Eigen::Index i = 0; i < n; ++i) phi(i * n + i) = 1.0;
  const Matrix id = Matrix::Identity(n, n);

  // A first: psi -> |psi>_{A_in} |Phi>_{A_out B_in} |Phi>_{B_out F_t}.
  const Matrix v0 = qcore::kron({id, Matrix(phi), Matrix(phi)});
  // B first, built as (B_in, B_out, A_in, A_out, F_t) and reindexed.
  const Matrix v1_src = v0;
  Matrix v1(v1_src.rows(), v1_src.cols());
  const std::size_t stride[] = {d * d * d * d, d * d * d, d * d, d, 1};
  for (std::size_t s = 0; s < static_cast<std::size_t>(v1_src.rows()); ++s) {
    const std::size_t bi = s / stride[0] % d, bo = s / stride[1] % d, ai = s / stride[2] % d,
                      ao = s / stride[3] % d, f = s % d;
    const std::size_t t = ai * stride[0] + ao * stride[1] + bi * stride[2] + bo * stride[3] + f;
    v1.row(static_cast<Eigen::Index>(t)) = v1_src.row(static_cast<Eigen::Index>(s));
  }

  const Matrix* v[] = {&v0, &v1};
  const Matrix& rho = target.matrix();
  const Matrix& c = control.matrix();
  const Eigen::Index big = v0.rows();
  Matrix w = Matrix::Zero(big * 2, big * 2);
  for (int k = 0; k < 2; ++k) {
    for (int l = 0; l < 2; ++l) {
      Matrix kl = Matrix::Zero(2, 2);
      kl(k, l) = c(k, l);
      w += qcore::kron({Matrix(*v[k] * rho * v[l]->adjoint()), kl});
    }
  }
  return ComplexOperator(std::move(w), Dims{d, d, d, d, d, 2});
}

ProcessMatrix SwitchModel::traced_process(const DensityMatrix& target,
                                          const DensityMatrix& control) const {
  return ProcessMatrix(qcore::partial_trace(full_process(target, control), {0, 1, 2, 3}));
}

SwitchModel build_quantum_switch(const Matrix& u_a, const Matrix& u_b) {
  return SwitchModel(u_a, u_b);
}

namespace {

ComplexOperator depolarize_all(ComplexOperator rho, double p) {
  if (p == 0.0) return rho;
  for (std::size_t k = 0; k < rho.subsystem_count(); ++k) {
    rho = qcore::depolarize_subsystem(rho, k, p);
  }
  return rho;
}

double entropy_of(const ComplexOperator& rho) {
  return qcore::von_neumann_entropy(DensityMatrix(rho));
}

}  // namespace

ComparisonReport ac_vs_ico_entropy(const Matrix& u_a, const Matrix& u_b, double noise,
                                   int steps) {
  if (steps <= 0) throw std::invalid_argument("ac_vs_ico_entropy: steps must be > 0");
  if (!(noise >= 0.0 && noise <= 1.0)) {
    throw std::invalid_argument("ac_vs_ico_entropy: noise outside [0,1]");
  }
  const SwitchModel sw(u_a, u_b);
  const std::size_t d = sw.target_dim();
  const Dims dims{d, 2};

  const Matrix initial = qcore::kron({DensityMatrix::basis(d, 0).matrix(),
                                      DensityMatrix::pure(qcore::gates::plus()).matrix()});
  ComplexOperator ac(initial, dims);
  ComplexOperator ico(initial, dims);

  const Matrix id2 = Matrix::Identity(2, 2);
  const Matrix ac_even = qcore::kron({sw.order_unitary(0), id2});
  const Matrix ac_odd = qcore::kron({sw.order_unitary(1), id2});
  const Matrix switch_u = sw.controlled_unitary();

  ComparisonReport report;
  report.noise = noise;
  report.steps = steps;
  report.ac_entropy.push_back(entropy_of(ac));
  report.ico_entropy.push_back(entropy_of(ico));
  for (int s = 0; s < steps; ++s) {
    ac = depolarize_all(qcore::conjugate(ac, s % 2 == 0 ? ac_even : ac_odd), noise);
    ico = depolarize_all(qcore::conjugate(ico, switch_u), noise);
    report.ac_entropy.push_back(entropy_of(ac));
    report.ico_entropy.push_back(entropy_of(ico));
  }
  report.ac_final = report.ac_entropy.back();
  report.ico_final = report.ico_entropy.back();
  return report;
}

std::vector<ComparisonReport> ac_vs_ico_sweep(const Matrix& u_a, const Matrix& u_b,
                                              std::span<const double> noises, int steps) {
  std::vector<ComparisonReport> out(noises.size());
  std::vector<std::exception_ptr> errors(noises.size());
  const auto n = static_cast<std::ptrdiff_t>(noises.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      out[k] = ac_vs_ico_entropy(u_a, u_b, noises[k], steps);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace subtime::process
