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

#include "subtime/qcore/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "subtime/qcore/kernels.hpp"
#include "subtime/qcore/linalg.hpp"

namespace subtime::qcore {

DensityMatrix::DensityMatrix(ComplexOperator op, double tol) : op_(std::move(op)) {
  const Matrix& m = op_.matrix();
  if (hermiticity_deviation(m) > tol) {
    throw ValidationError("DensityMatrix: not Hermitian");
  }
  if (std::abs(m.trace() - Complex(1.0, 0.0)) > tol) {
    throw ValidationError("DensityMatrix: trace is not 1");
  }
  if (hermitian_eigenvalues(m).minCoeff() < -tol) {
    throw ValidationError("DensityMatrix: negative eigenvalue");
  }
}

DensityMatrix DensityMatrix::pure(const Vector& psi, Dims dims) {
  const double norm2 = psi.squaredNorm();
  if (norm2 <= 0.0) throw ValidationError("DensityMatrix::pure: zero vector");
  Matrix m = psi * psi.adjoint() / norm2;
  return DensityMatrix(ComplexOperator(std::move(m), std::move(dims)));
}

DensityMatrix DensityMatrix::pure(const Vector& psi) {
  return pure(psi, Dims{static_cast<std::size_t>(psi.size())});
}

DensityMatrix DensityMatrix::maximally_mixed(const Dims& dims) {
  auto id = ComplexOperator::identity(dims);
  id *= 1.0 / static_cast<double>(product(dims));
  return DensityMatrix(std::move(id));
}

DensityMatrix DensityMatrix::basis(std::size_t d, std::size_t i) {
  return pure(gates::ket(d, i));
}

Channel::Channel(ComplexOperator choi, std::size_t in_dim, std::size_t out_dim,
                 double tol)
    : choi_(choi.with_dims({in_dim, out_dim})), in_dim_(in_dim), out_dim_(out_dim) {
  const Matrix& m = choi_.matrix();
  if (hermiticity_deviation(m) > tol ||
      hermitian_eigenvalues(m).minCoeff() < -tol) {
    throw ValidationError("Channel: Choi matrix is not positive semidefinite");
  }
  const std::size_t keep_in[] = {0};
  const Matrix reduced = kernels::parallel::partial_trace(m, choi_.dims(), keep_in);
  const auto n = static_cast<Eigen::Index>(in_dim_);
  if (spectral_norm(reduced - Matrix::Identity(n, n)) > tol) {
    throw ValidationError("Channel: not trace preserving");
  }
}

Channel Channel::from_kraus(std::span<const Matrix> kraus) {
  if (kraus.empty()) throw DimensionError("Channel::from_kraus: no Kraus operators");
  const auto dout = kraus.front().rows();
  const auto din = kraus.front().cols();
  // |Phi> = sum_i |i>|i>; choi = sum_k (I (x) K) |Phi><Phi| (I (x) K)^dagger.
  Matrix choi = Matrix::Zero(din * dout, din * dout);
  for (const auto& k : kraus) {
    if (k.rows() != dout || k.cols() != din) {
      throw DimensionError("Channel::from_kraus: inconsistent Kraus shapes");
    }
    Vector v = Vector::Zero(din * dout);
    for (Eigen::Index i = 0; i < din; ++i) {
      v.segment(i * dout, dout) = k.col(i);
    }
    choi += v * v.adjoint();
  }
  return Channel(ComplexOperator(std::move(choi),
                                 {static_cast<std::size_t>(din),
                                  static_cast<std::size_t>(dout)}),
                 static_cast<std::size_t>(din), static_cast<std::size_t>(dout));
}

Channel Channel::identity(std::size_t d) {
  const Matrix id = gates::identity(d);
  return from_kraus(std::span<const Matrix>(&id, 1));
}

Channel Channel::unitary(const Matrix& u) {
  if (!is_unitary(u)) throw ValidationError("Channel::unitary: not unitary");
  return from_kraus(std::span<const Matrix>(&u, 1));
}

Channel Channel::depolarizing(std::size_t d, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("depolarizing: p outside [0,1]");
  const auto n = static_cast<Eigen::Index>(d);
  const Matrix id = Matrix::Identity(n * n, n * n);
  Matrix phi = Matrix::Zero(n * n, n * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) phi(i * n + i, j * n + j) = 1.0;
  Matrix choi = (1.0 - p) * phi + p * id / static_cast<double>(d);
  return Channel(ComplexOperator(std::move(choi), {d, d}), d, d);
}

Channel Channel::bit_flip(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("bit_flip: p outside [0,1]");
  const Matrix kraus[] = {std::sqrt(1.0 - p) * gates::identity(2),
                          std::sqrt(p) * gates::pauli_x()};
  return from_kraus(kraus);
}

Matrix Channel::block(std::size_t i, std::size_t j) const {
  const auto d = static_cast<Eigen::Index>(out_dim_);
  return choi_.matrix().block(static_cast<Eigen::Index>(i) * d,
                              static_cast<Eigen::Index>(j) * d, d, d);
}

Matrix kron(std::initializer_list<Matrix> factors) {
  Matrix out = Matrix::Identity(1, 1);
  for (const auto& f : factors) out = kernels::parallel::kron(out, f);
  return out;
}

ComplexOperator tensor(const ComplexOperator& a, const ComplexOperator& b) {
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return ComplexOperator(kernels::parallel::kron(a.matrix(), b.matrix()),
                         std::move(dims));
}

ComplexOperator partial_trace(const ComplexOperator& m,
                              std::span<const std::size_t> keep) {
  Matrix reduced = kernels::parallel::partial_trace(m.matrix(), m.dims(), keep);
  Dims dims;
  for (auto k : keep) dims.push_back(m.dims()[k]);
  return ComplexOperator(std::move(reduced), std::move(dims));
}

ComplexOperator partial_trace(const ComplexOperator& m,
                              std::initializer_list<std::size_t> keep) {
  return partial_trace(m, std::span<const std::size_t>(keep.begin(), keep.size()));
}

ComplexOperator permute_subsystems(const ComplexOperator& m,
                                   std::span<const std::size_t> perm) {
  Matrix out = kernels::parallel::permute(m.matrix(), m.dims(), perm);
  Dims dims(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) dims[i] = m.dims()[perm[i]];
  return ComplexOperator(std::move(out), std::move(dims));
}

ComplexOperator depolarize_subsystem(const ComplexOperator& m, std::size_t k,
                                     double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("depolarize: p outside [0,1]");
  return ComplexOperator(kernels::parallel::depolarize(m.matrix(), m.dims(), k, p),
                         m.dims());
}

ComplexOperator dagger(const ComplexOperator& m) {
  return ComplexOperator(m.matrix().adjoint(), m.dims());
}

ComplexOperator conjugate(const ComplexOperator& m, const Matrix& u) {
  if (u.rows() != m.matrix().rows() || u.cols() != m.matrix().cols()) {
    throw DimensionError("conjugate: size mismatch");
  }
  return ComplexOperator(u * m.matrix() * u.adjoint(), m.dims());
}

DensityMatrix apply_channel(const Channel& c, const DensityMatrix& rho, double tol) {
  if (rho.side() != c.in_dim()) {
    throw DimensionError("apply_channel: state dimension " +
                         std::to_string(rho.side()) + " vs channel input " +
                         std::to_string(c.in_dim()));
  }
  const auto dout = static_cast<Eigen::Index>(c.out_dim());
  Matrix out = Matrix::Zero(dout, dout);
  const Matrix& r = rho.matrix();
  for (std::size_t i = 0; i < c.in_dim(); ++i) {
    for (std::size_t j = 0; j < c.in_dim(); ++j) {
      const Complex coeff = r(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      if (coeff != Complex(0.0, 0.0)) out += coeff * c.block(i, j);
    }
  }
  Dims dims = c.out_dim() == rho.side() ? rho.dims() : Dims{c.out_dim()};
  return DensityMatrix(ComplexOperator(std::move(out), std::move(dims)), tol);
}

double von_neumann_entropy(const DensityMatrix& rho, double tol) {
  const Eigen::VectorXd ev = hermitian_eigenvalues(rho.matrix());
  if (ev.minCoeff() < -tol) {
    throw ValidationError("von_neumann_entropy: state is not positive semidefinite");
  }
  double s = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    const double l = ev(i);
    if (l > 0.0) s -= l * std::log2(l);
  }
  return std::max(0.0, s);
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.side() != sigma.side()) {
    throw DimensionError("fidelity: dimension mismatch");
  }
  // ||sqrt(rho) sqrt(sigma)||_1 equals Tr sqrt(sqrt(rho) sigma sqrt(rho)) and
  // avoids square-rooting the near-zero spectrum of a rank-deficient product.
  Eigen::JacobiSVD<Matrix> svd(psd_sqrt(rho.matrix()) * psd_sqrt(sigma.matrix()));
  const double root = svd.singularValues().sum();
  return std::clamp(root * root, 0.0, 1.0);
}

namespace gates {

Matrix identity(std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d);
  return Matrix::Identity(n, n);
}

Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix pauli_y() {
  Matrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

Matrix hadamard() {
  Matrix m(2, 2);
  m << 1, 1, 1, -1;
  return m / std::numbers::sqrt2;
}

Matrix phase(std::size_t d, double phi) {
  const auto n = static_cast<Eigen::Index>(d);
  Matrix m = Matrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    m(k, k) = std::polar(1.0, phi * static_cast<double>(k));
  }
  return m;
}

Vector ket(std::size_t d, std::size_t i) {
  Vector v = Vector::Zero(static_cast<Eigen::Index>(d));
  v(static_cast<Eigen::Index>(i)) = 1.0;
  return v;
}

Vector plus() { return (ket(2, 0) + ket(2, 1)) / std::numbers::sqrt2; }
Vector minus() { return (ket(2, 0) - ket(2, 1)) / std::numbers::sqrt2; }

}  // namespace gates

}  // namespace subtime::qcore
