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

// Tensor-structure kernels on raw matrices. Two implementations share one
// contract: `serial` decodes every multi-index explicitly and is the reference
// the tests compare against; `parallel` precomputes stride tables and splits
// independent output entries across OpenMP threads. Both are deterministic:
// each output entry is accumulated by one thread in a fixed order.

#include <cstddef>
#include <span>

#include "subtime/qcore/operator.hpp"

namespace subtime::qcore::kernels {

namespace serial {

Matrix kron(const Matrix& a, const Matrix& b);

/// Trace out every subsystem not listed in `keep` (ascending, unique).
Matrix partial_trace(const Matrix& m, const Dims& dims,
                     std::span<const std::size_t> keep);

/// Output subsystem i is input subsystem perm[i].
Matrix permute(const Matrix& m, const Dims& dims,
               std::span<const std::size_t> perm);

/// Depolarize one subsystem: (1-p) m + p Tr_k(m) (x) I_k / d_k.
Matrix depolarize(const Matrix& m, const Dims& dims, std::size_t k, double p);

}  // namespace serial

namespace parallel {

Matrix kron(const Matrix& a, const Matrix& b);
Matrix partial_trace(const Matrix& m, const Dims& dims,
                     std::span<const std::size_t> keep);
Matrix permute(const Matrix& m, const Dims& dims,
               std::span<const std::size_t> perm);
Matrix depolarize(const Matrix& m, const Dims& dims, std::size_t k, double p);

}  // namespace parallel

/// Validates `keep` against `dims`: in range, ascending, no duplicates.
void check_keep(const Dims& dims, std::span<const std::size_t> keep);

/// Validates that `perm` is a permutation of 0..dims.size()-1.
void check_permutation(const Dims& dims, std::span<const std::size_t> perm);

/// Row-major strides: index = sum_k digit_k * stride_k.
Dims strides(const Dims& dims);

}  // namespace subtime::qcore::kernels
