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

// OpenMP kernels against the serial reference on random shapes, including
// sizes above the parallel threshold.

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <vector>

#include "subtime/qcore/kernels.hpp"
#include "subtime/qcore/random.hpp"

using namespace subtime::qcore;

namespace {

Dims random_dims(Rng& rng, std::size_t max_side) {
  std::uniform_int_distribution<std::size_t> count(1, 4), dim(2, 3);
  for (;;) {
    Dims d(count(rng));
    for (auto& x : d) x = dim(rng);
    if (product(d) <= max_side) return d;
  }
}

}  // namespace

TEST_CASE("parallel kernels agree with the serial reference", "[kernels][property]") {
  Rng rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const Dims dims = random_dims(rng, 81);
    const Matrix m = ginibre(product(dims), product(dims), rng);

    std::vector<std::size_t> keep;
    std::bernoulli_distribution coin(0.5);
    for (std::size_t k = 0; k < dims.size(); ++k)
      if (coin(rng)) keep.push_back(k);
    CHECK((kernels::parallel::partial_trace(m, dims, keep) -
           kernels::serial::partial_trace(m, dims, keep))
              .norm() < 1e-12);

    std::vector<std::size_t> perm(dims.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK((kernels::parallel::permute(m, dims, perm) - kernels::serial::permute(m, dims, perm))
              .norm() == 0.0);

    const std::size_t k = rng() % dims.size();
    CHECK((kernels::parallel::depolarize(m, dims, k, 0.3) -
           kernels::serial::depolarize(m, dims, k, 0.3))
              .norm() < 1e-12);

    const Matrix b = ginibre(3, 2, rng);
    CHECK((kernels::parallel::kron(m, b) - kernels::serial::kron(m, b)).norm() == 0.0);
  }
}

TEST_CASE("kernels above the parallel threshold", "[kernels]") {
  Rng rng(8);
  const Dims dims(7, 2);
  const Matrix m = ginibre(128, 128, rng);
  const std::size_t keep[] = {1, 4, 6};
  CHECK((kernels::parallel::partial_trace(m, dims, keep) -
         kernels::serial::partial_trace(m, dims, keep))
            .norm() < 1e-11);
  CHECK((kernels::parallel::depolarize(m, dims, 3, 0.7) -
         kernels::serial::depolarize(m, dims, 3, 0.7))
            .norm() < 1e-11);
  const std::size_t perm[] = {6, 0, 5, 1, 4, 2, 3};
  CHECK((kernels::parallel::permute(m, dims, perm) - kernels::serial::permute(m, dims, perm))
            .norm() == 0.0);
}

TEST_CASE("permutation then inverse permutation is the identity", "[kernels][property]") {
  Rng rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    const Dims dims = random_dims(rng, 64);
    const Matrix m = ginibre(product(dims), product(dims), rng);
    std::vector<std::size_t> perm(dims.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Dims permuted(dims.size());
    for (std::size_t i = 0; i < perm.size(); ++i) permuted[i] = dims[perm[i]];
    std::vector<std::size_t> inverse(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) inverse[perm[i]] = i;
    const Matrix back =
        kernels::parallel::permute(kernels::parallel::permute(m, dims, perm), permuted, inverse);
    CHECK((back - m).norm() == 0.0);
  }
}

TEST_CASE("depolarize with p = 1 equals trace-and-replace", "[kernels]") {
  Rng rng(12);
  const Dims dims{2, 3};
  const Matrix m = ginibre(6, 6, rng);
  const std::size_t keep[] = {1};
  const Matrix reduced = kernels::serial::partial_trace(m, dims, keep);
  const Matrix expected = kernels::serial::kron(Matrix::Identity(2, 2) / 2.0, reduced);
  CHECK((kernels::parallel::depolarize(m, dims, 0, 1.0) - expected).norm() < 1e-13);
}

TEST_CASE("kernel argument validation", "[kernels]") {
  const Dims dims{2, 2};
  const Matrix m = Matrix::Identity(4, 4);
  const std::size_t bad_keep[] = {0, 0};
  CHECK_THROWS_AS(kernels::parallel::partial_trace(m, dims, bad_keep), DimensionError);
  const std::size_t bad_perm[] = {0, 0};
  CHECK_THROWS_AS(kernels::parallel::permute(m, dims, bad_perm), DimensionError);
  CHECK_THROWS_AS(kernels::serial::depolarize(m, dims, 2, 0.1), DimensionError);
}
