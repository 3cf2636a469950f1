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
#include <random>

#include "subtime/qcore/operator.hpp"
#include "subtime/qcore/quantum.hpp"

namespace subtime::qcore {

using Rng = std::mt19937_64;

/// i.i.d. standard complex Gaussian entries.
Matrix ginibre(std::size_t rows, std::size_t cols, Rng& rng);

/// Haar-random unitary (QR of a Ginibre matrix with phase correction).
Matrix random_unitary(std::size_t d, Rng& rng);

Matrix random_hermitian(std::size_t d, Rng& rng);

/// Induced-measure mixed state of the given rank (full rank when 0).
DensityMatrix random_density(const Dims& dims, Rng& rng, std::size_t rank = 0);

/// Random CPTP map via a Haar isometry into out (x) environment.
Channel random_channel(std::size_t in_dim, std::size_t out_dim, Rng& rng,
                       std::size_t kraus_count = 2);

}  // namespace subtime::qcore
