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

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "subtime/qcore/operator.hpp"

namespace subtime::qcore {

/// Unit-trace positive semidefinite operator.
class DensityMatrix {
 public:
  /// Throws ValidationError unless Hermitian, unit trace and PSD within tol.
  explicit DensityMatrix(ComplexOperator op, double tol = kDefaultTolerance);

  /// |psi><psi| / <psi|psi>.
  static DensityMatrix pure(const Vector& psi, Dims dims);
  static DensityMatrix pure(const Vector& psi);
  static DensityMatrix maximally_mixed(const Dims& dims);
  /// |i><i| on a single subsystem of dimension d.
  static DensityMatrix basis(std::size_t d, std::size_t i);

  const ComplexOperator& op() const noexcept { return op_; }
  const Matrix& matrix() const noexcept { return op_.matrix(); }
  const Dims& dims() const noexcept { return op_.dims(); }
  std::size_t side() const noexcept { return op_.side(); }

 private:
  ComplexOperator op_;
};

/**
 * Completely positive trace-preserving map in Choi form.
 *
 * choi = sum_ij |i><j|_in (x) C(|i><j|)_out, so trace preservation reads
 * Tr_out(choi) = I_in and the action is C(rho) = sum_ij rho_ij C(|i><j|).
 */
class Channel {
 public:
  Channel(ComplexOperator choi, std::size_t in_dim, std::size_t out_dim,
          double tol = kDefaultTolerance);

  static Channel identity(std::size_t d);
  static Channel unitary(const Matrix& u);
  static Channel from_kraus(std::span<const Matrix> kraus);
  /// rho -> (1-p) rho + p Tr(rho) I/d
  static Channel depolarizing(std::size_t d, double p);
  /// rho -> (1-p) rho + p X rho X
  static Channel bit_flip(double p);

  const ComplexOperator& choi() const noexcept { return choi_; }
  std::size_t in_dim() const noexcept { return in_dim_; }
  std::size_t out_dim() const noexcept { return out_dim_; }

  /// C(|i><j|): the (i, j) block of the Choi matrix.
  Matrix block(std::size_t i, std::size_t j) const;

 private:
  ComplexOperator choi_;
  std::size_t in_dim_;
  std::size_t out_dim_;
};

/// Kronecker product of raw matrices, left to right.
Matrix kron(std::initializer_list<Matrix> factors);

/// Kronecker product; dims concatenated.
ComplexOperator tensor(const ComplexOperator& a, const ComplexOperator& b);

/// Operator on the subsystems in `keep` (ascending), all others traced out.
ComplexOperator partial_trace(const ComplexOperator& m,
                              std::span<const std::size_t> keep);
ComplexOperator partial_trace(const ComplexOperator& m,
                              std::initializer_list<std::size_t> keep);

/// Reorder subsystems: output subsystem i is input subsystem perm[i].
ComplexOperator permute_subsystems(const ComplexOperator& m,
                                   std::span<const std::size_t> perm);

/// Depolarizing channel of strength p applied to subsystem k only.
ComplexOperator depolarize_subsystem(const ComplexOperator& m, std::size_t k,
                                     double p);

ComplexOperator dagger(const ComplexOperator& m);

/// Conjugation u m u^dagger with u acting on the full space.
ComplexOperator conjugate(const ComplexOperator& m, const Matrix& u);

DensityMatrix apply_channel(const Channel& c, const DensityMatrix& rho,
                            double tol = kDefaultTolerance);

/// Von Neumann entropy in bits; throws ValidationError on eigenvalues < -tol.
double von_neumann_entropy(const DensityMatrix& rho, double tol = kDefaultTolerance);

/// Uhlmann fidelity (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2, in [0, 1].
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

namespace gates {

Matrix identity(std::size_t d = 2);
Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();
Matrix hadamard();
/// diag(1, e^{i phi}, e^{2 i phi}, ...)
Matrix phase(std::size_t d, double phi);
/// Computational basis vector |i> in dimension d.
Vector ket(std::size_t d, std::size_t i);
Vector plus();
Vector minus();

}  // namespace gates

}  // namespace subtime::qcore
