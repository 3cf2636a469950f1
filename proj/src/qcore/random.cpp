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

#include "subtime/qcore/random.hpp"

#include <vector>

namespace subtime::qcore {

Matrix ginibre(std::size_t rows, std::size_t cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      m(i, j) = Complex(re, im);
    }
  return m;
}

Matrix random_unitary(std::size_t d, Rng& rng) {
  const Matrix g = ginibre(d, d, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < q.cols(); ++k) {
    const Complex diag = r(k, k);
    const double mag = std::abs(diag);
    if (mag > 0.0) q.col(k) *= diag / mag;
  }
  return q;
}

Matrix random_hermitian(std::size_t d, Rng& rng) {
  const Matrix g = ginibre(d, d, rng);
  return 0.5 * (g + g.adjoint());
}

DensityMatrix random_density(const Dims& dims, Rng& rng, std::size_t rank) {
  const std::size_t d = product(dims);
  const Matrix g = ginibre(d, rank == 0 ? d : rank, rng);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix(ComplexOperator(std::move(rho), dims));
}

Channel random_channel(std::size_t in_dim, std::size_t out_dim, Rng& rng,
                       std::size_t kraus_count) {
  // Columns of a Haar unitary on out*env form an isometry in -> out (x) env.
  const std::size_t big = out_dim * kraus_count;
  if (big < in_dim) throw DimensionError("random_channel: environment too small");
  const Matrix u = random_unitary(big, rng);
  const auto dout = static_cast<Eigen::Index>(out_dim);
  const auto din = static_cast<Eigen::Index>(in_dim);
  std::vector<Matrix> kraus;
  for (std::size_t e = 0; e < kraus_count; ++e) {
    Matrix k(dout, din);
    for (Eigen::Index o = 0; o < dout; ++o)
      for (Eigen::Index i = 0; i < din; ++i)
        k(o, i) = u(o * static_cast<Eigen::Index>(kraus_count) +
                        static_cast<Eigen::Index>(e),
                    i);
    kraus.push_back(std::move(k));
  }
  return Channel::from_kraus(kraus);
}

}  // namespace subtime::qcore
