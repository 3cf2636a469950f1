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

#include <Eigen/Dense>

#include "subtime/qcore/operator.hpp"

namespace subtime::qcore {

/// (M + M^dagger) / 2
Matrix hermitian_part(const Matrix& m);

/// Eigenvalues (ascending) of the Hermitian part of `m`.
Eigen::VectorXd hermitian_eigenvalues(const Matrix& m);

/// Largest singular value.
double spectral_norm(const Matrix& m);

/// Spectral norm of M - M^dagger, i.e. how far `m` is from Hermitian.
double hermiticity_deviation(const Matrix& m);

/// Square root of the Hermitian part, negative eigenvalues clipped to zero.
Matrix psd_sqrt(const Matrix& m);

/// Matrix exponential (Pade with scaling and squaring).
Matrix expm(const Matrix& m);

bool is_unitary(const Matrix& m, double tol = kDefaultTolerance);

}  // namespace subtime::qcore
