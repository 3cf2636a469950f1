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

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace subtime::qcore {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Subsystem dimensions, most significant (leftmost tensor factor) first.
using Dims = std::vector<std::size_t>;

/// Default tolerance for Hermiticity, positivity and trace checks.
inline constexpr double kDefaultTolerance = 1e-9;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ValidationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

std::size_t product(const Dims& dims);
std::string to_string(const Dims& dims);

/**
 * Dense square complex matrix tagged with its tensor-product structure.
 *
 * The side length always equals the product of the subsystem dimensions and
 * every subsystem has dimension at least 2. An empty dims list denotes a
 * scalar (1x1), which is what a full partial trace produces.
 */
class ComplexOperator {
 public:
  ComplexOperator(Matrix entries, Dims dims);

  /// Single-subsystem operator; the dimension is the matrix side.
  explicit ComplexOperator(Matrix entries);

  static ComplexOperator identity(const Dims& dims);
  static ComplexOperator zero(const Dims& dims);

  const Matrix& matrix() const noexcept { return entries_; }
  const Dims& dims() const noexcept { return dims_; }
  std::size_t side() const noexcept {
    return static_cast<std::size_t>(entries_.rows());
  }
  std::size_t subsystem_count() const noexcept { return dims_.size(); }

  Complex trace() const { return entries_.trace(); }

  /// Same entries reinterpreted with another factorization of the side.
  ComplexOperator with_dims(Dims dims) const;

  ComplexOperator& operator+=(const ComplexOperator& other);
  ComplexOperator& operator-=(const ComplexOperator& other);
  ComplexOperator& operator*=(Complex scalar);

  friend ComplexOperator operator+(ComplexOperator a, const ComplexOperator& b) {
    a += b;
    return a;
  }
  friend ComplexOperator operator-(ComplexOperator a, const ComplexOperator& b) {
    a -= b;
    return a;
  }
  friend ComplexOperator operator*(ComplexOperator a, Complex s) {
    a *= s;
    return a;
  }
  friend ComplexOperator operator*(Complex s, ComplexOperator a) {
    a *= s;
    return a;
  }

  /// Matrix product; both operands must carry identical dims.
  friend ComplexOperator operator*(const ComplexOperator& a,
                                   const ComplexOperator& b);

 private:
  void require_same_dims(const ComplexOperator& other, const char* what) const;

  Matrix entries_;
  Dims dims_;
};

}  // namespace subtime::qcore
