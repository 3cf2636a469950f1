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

#include "subtime/qcore/linalg.hpp"

#include <algorithm>
#include <limits>

#include <unsupported/Eigen/MatrixFunctions>

namespace subtime::qcore {

Matrix hermitian_part(const Matrix& m) { return 0.5 * (m + m.adjoint()); }

Eigen::VectorXd hermitian_eigenvalues(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(m), Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

double spectral_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

double hermiticity_deviation(const Matrix& m) {
  return spectral_norm(m - m.adjoint());
}

Matrix psd_sqrt(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(m));
  // Eigenvalues at round-off level are zero; their square roots would not be.
  const Eigen::VectorXd ev = es.eigenvalues();
  const double floor = 64.0 * std::numeric_limits<double>::epsilon() *
                       std::max(1.0, ev.cwiseAbs().maxCoeff());
  const Eigen::VectorXd root = ev.unaryExpr([floor](double x) { return x > floor ? x : 0.0; })
                                   .cwiseSqrt();
  return es.eigenvectors() * root.asDiagonal() * es.eigenvectors().adjoint();
}

Matrix expm(const Matrix& m) { return m.exp(); }

bool is_unitary(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const Matrix id = Matrix::Identity(m.rows(), m.cols());
  return spectral_norm(m.adjoint() * m - id) <= tol;
}

}  // namespace subtime::qcore
