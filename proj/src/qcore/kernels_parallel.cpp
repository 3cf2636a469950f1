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

#include <vector>

#include "subtime/qcore/kernels.hpp"

namespace subtime::qcore::kernels::parallel {

namespace {

// Below this many output entries the thread fork costs more than the work.
constexpr std::ptrdiff_t kParallelThreshold = 4096;

// Offsets into the full index space of every multi-index over `subset`,
// enumerated in row-major order of the subset's own digits.
std::vector<std::size_t> offsets(const Dims& dims, const Dims& full_strides,
                                 const std::vector<std::size_t>& subset) {
  std::vector<std::size_t> out{0};
  for (auto k : subset) {
    std::vector<std::size_t> next;
    next.reserve(out.size() * dims[k]);
    for (auto base : out)
      for (std::size_t x = 0; x < dims[k]; ++x) next.push_back(base + x * full_strides[k]);
    out = std::move(next);
  }
  return out;
}

}  // namespace

Matrix kron(const Matrix& a, const Matrix& b) {
  const auto ra = a.rows(), ca = a.cols(), rb = b.rows(), cb = b.cols();
  Matrix out(ra * rb, ca * cb);
  const std::ptrdiff_t blocks = ra * ca;
#pragma omp parallel for schedule(static) if (blocks * rb * cb > kParallelThreshold)
  for (std::ptrdiff_t blk = 0; blk < blocks; ++blk) {
    const auto i = blk % ra;
    const auto j = blk / ra;
    out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
  }
  return out;
}

Matrix partial_trace(const Matrix& m, const Dims& dims,
                     std::span<const std::size_t> keep) {
  check_keep(dims, keep);
  const auto st = strides(dims);
  std::vector<std::size_t> kept(keep.begin(), keep.end());
  std::vector<std::size_t> traced;
  for (std::size_t k = 0, j = 0; k < dims.size(); ++k) {
    if (j < kept.size() && kept[j] == k) {
      ++j;
    } else {
      traced.push_back(k);
    }
  }
  const auto kept_off = offsets(dims, st, kept);
  const auto traced_off = offsets(dims, st, traced);
  const auto n = static_cast<std::ptrdiff_t>(kept_off.size());

  Matrix out(n, n);
#pragma omp parallel for schedule(static) if (n * n * static_cast<std::ptrdiff_t>(traced_off.size()) > kParallelThreshold)
  for (std::ptrdiff_t c = 0; c < n; ++c) {
    for (std::ptrdiff_t r = 0; r < n; ++r) {
      Complex sum = 0.0;
      const auto rb = kept_off[static_cast<std::size_t>(r)];
      const auto cb = kept_off[static_cast<std::size_t>(c)];
      for (auto t : traced_off) {
        sum += m(static_cast<Eigen::Index>(rb + t), static_cast<Eigen::Index>(cb + t));
      }
      out(r, c) = sum;
    }
  }
  return out;
}

Matrix permute(const Matrix& m, const Dims& dims,
               std::span<const std::size_t> perm) {
  check_permutation(dims, perm);
  const auto st = strides(dims);
  // Output digit i reads input digit perm[i]; enumerating the input offsets in
  // output digit order gives the source index of every output index.
  const auto src = offsets(dims, st, std::vector<std::size_t>(perm.begin(), perm.end()));
  const auto n = static_cast<std::ptrdiff_t>(src.size());
  Matrix out(n, n);
#pragma omp parallel for schedule(static) if (n * n > kParallelThreshold)
  for (std::ptrdiff_t c = 0; c < n; ++c) {
    const auto sc = static_cast<Eigen::Index>(src[static_cast<std::size_t>(c)]);
    for (std::ptrdiff_t r = 0; r < n; ++r) {
      out(r, c) = m(static_cast<Eigen::Index>(src[static_cast<std::size_t>(r)]), sc);
    }
  }
  return out;
}

Matrix depolarize(const Matrix& m, const Dims& dims, std::size_t k, double p) {
  if (k >= dims.size()) throw DimensionError("depolarize: subsystem out of range");
  const auto st = strides(dims);
  const std::size_t dk = dims[k];
  const std::size_t sk = st[k];
  const double inv_d = 1.0 / static_cast<double>(dk);
  const auto n = m.rows();
  Matrix out(n, n);
#pragma omp parallel for schedule(static) if (n * n > kParallelThreshold)
  for (std::ptrdiff_t c = 0; c < n; ++c) {
    const auto cdig = (static_cast<std::size_t>(c) / sk) % dk;
    const auto cbase = static_cast<std::size_t>(c) - cdig * sk;
    for (std::ptrdiff_t r = 0; r < n; ++r) {
      const auto rdig = (static_cast<std::size_t>(r) / sk) % dk;
      const auto rbase = static_cast<std::size_t>(r) - rdig * sk;
      Complex reduced = 0.0;
      if (rdig == cdig) {
        for (std::size_t x = 0; x < dk; ++x) {
          reduced += m(static_cast<Eigen::Index>(rbase + x * sk),
                       static_cast<Eigen::Index>(cbase + x * sk));
        }
      }
      out(r, c) = (1.0 - p) * m(r, c) + p * inv_d * reduced;
    }
  }
  return out;
}

}  // namespace subtime::qcore::kernels::parallel
