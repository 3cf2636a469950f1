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

#include "subtime/qcore/operator.hpp"

#include <sstream>
#include <utility>

namespace subtime::qcore {

std::size_t product(const Dims& dims) {
  std::size_t p = 1;
  for (auto d : dims) p *= d;
  return p;
}

std::string to_string(const Dims& dims) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) os << ',';
    os << dims[i];
  }
  os << ']';
  return os.str();
}

ComplexOperator::ComplexOperator(Matrix entries, Dims dims)
    : entries_(std::move(entries)), dims_(std::move(dims)) {
  if (entries_.rows() != entries_.cols()) {
    throw DimensionError("ComplexOperator: matrix is not square");
  }
  for (auto d : dims_) {
    if (d < 2) {
      throw DimensionError("ComplexOperator: subsystem dimension below 2 in " +
                           to_string(dims_));
    }
  }
  if (product(dims_) != side()) {
    throw DimensionError("ComplexOperator: dims " + to_string(dims_) +
                         " do not factor side " + std::to_string(side()));
  }
}

ComplexOperator::ComplexOperator(Matrix entries)
    : ComplexOperator(entries, Dims{static_cast<std::size_t>(entries.rows())}) {}

ComplexOperator ComplexOperator::identity(const Dims& dims) {
  const auto n = static_cast<Eigen::Index>(product(dims));
  return ComplexOperator(Matrix::Identity(n, n), dims);
}

ComplexOperator ComplexOperator::zero(const Dims& dims) {
  const auto n = static_cast<Eigen::Index>(product(dims));
  return ComplexOperator(Matrix::Zero(n, n), dims);
}

ComplexOperator ComplexOperator::with_dims(Dims dims) const {
  return ComplexOperator(entries_, std::move(dims));
}

void ComplexOperator::require_same_dims(const ComplexOperator& other,
                                        const char* what) const {
  if (dims_ != other.dims_) {
    throw DimensionError(std::string(what) + ": dims " + to_string(dims_) +
                         " vs " + to_string(other.dims_));
  }
}

ComplexOperator& ComplexOperator::operator+=(const ComplexOperator& other) {
  require_same_dims(other, "operator+");
  entries_ += other.entries_;
  return *this;
}

ComplexOperator& ComplexOperator::operator-=(const ComplexOperator& other) {
  require_same_dims(other, "operator-");
  entries_ -= other.entries_;
  return *this;
}

ComplexOperator& ComplexOperator::operator*=(Complex scalar) {
  entries_ *= scalar;
  return *this;
}

ComplexOperator operator*(const ComplexOperator& a, const ComplexOperator& b) {
  a.require_same_dims(b, "operator*");
  return ComplexOperator(a.entries_ * b.entries_, a.dims_);
}

}  // namespace subtime::qcore
