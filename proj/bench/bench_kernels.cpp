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

// Serial reference kernels against their OpenMP counterparts on n-qubit
// operators. Run with OMP_NUM_THREADS set to compare scaling.

#include <benchmark/benchmark.h>

#include <vector>

#include "subtime/qcore/kernels.hpp"
#include "subtime/qcore/random.hpp"

namespace {

using namespace subtime::qcore;

Matrix random_matrix(std::size_t d) {
  Rng rng(42);
  return ginibre(d, d, rng);
}

Dims qubits(std::size_t n) { return Dims(n, 2); }

template <bool Parallel>
void BM_PartialTrace(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Dims dims = qubits(n);
  const Matrix m = random_matrix(product(dims));
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < n; k += 2) keep.push_back(k);
  for (auto _ : state) {
    Matrix out = Parallel ? kernels::parallel::partial_trace(m, dims, keep)
                          : kernels::serial::partial_trace(m, dims, keep);
    benchmark::DoNotOptimize(out.data());
  }
}

template <bool Parallel>
void BM_Kron(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(std::size_t{1} << (n / 2));
  const Matrix b = random_matrix(std::size_t{1} << (n - n / 2));
  for (auto _ : state) {
    Matrix out = Parallel ? kernels::parallel::kron(a, b) : kernels::serial::kron(a, b);
    benchmark::DoNotOptimize(out.data());
  }
}

template <bool Parallel>
void BM_Depolarize(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Dims dims = qubits(n);
  const Matrix m = random_matrix(product(dims));
  for (auto _ : state) {
    Matrix out = Parallel ? kernels::parallel::depolarize(m, dims, n / 2, 0.1)
                          : kernels::serial::depolarize(m, dims, n / 2, 0.1);
    benchmark::DoNotOptimize(out.data());
  }
}

template <bool Parallel>
void BM_Permute(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Dims dims = qubits(n);
  const Matrix m = random_matrix(product(dims));
  std::vector<std::size_t> perm;
  for (std::size_t k = n; k-- > 0;) perm.push_back(k);
  for (auto _ : state) {
    Matrix out = Parallel ? kernels::parallel::permute(m, dims, perm)
                          : kernels::serial::permute(m, dims, perm);
    benchmark::DoNotOptimize(out.data());
  }
}

}  // namespace

BENCHMARK(BM_PartialTrace<false>)->Name("partial_trace/serial")->DenseRange(4, 8, 2);
BENCHMARK(BM_PartialTrace<true>)->Name("partial_trace/parallel")->DenseRange(4, 8, 2);
BENCHMARK(BM_Kron<false>)->Name("kron/serial")->DenseRange(4, 10, 2);
BENCHMARK(BM_Kron<true>)->Name("kron/parallel")->DenseRange(4, 10, 2);
BENCHMARK(BM_Depolarize<false>)->Name("depolarize/serial")->DenseRange(4, 8, 2);
BENCHMARK(BM_Depolarize<true>)->Name("depolarize/parallel")->DenseRange(4, 8, 2);
BENCHMARK(BM_Permute<false>)->Name("permute/serial")->DenseRange(4, 8, 2);
BENCHMARK(BM_Permute<true>)->Name("permute/parallel")->DenseRange(4, 8, 2);

BENCHMARK_MAIN();
