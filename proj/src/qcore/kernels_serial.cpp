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

// Reference kernels. Every loop decodes full multi-indices digit by digit;
// slow, but each line maps onto the index formula it implements.

#include <algorithm>
#include <vector>

#include "subtime/qcore/kernels.hpp"

namespace subtime::qcore::kernels {

Dims strides(const Dims& dims) {
  Dims s(dims.size(), 1);
  for (std::size_t k = dims.size(); k-- > 1;) s[k - 1] = s[k] * dims[k];
  return s;
}

void check_keep(const Dims& dims, std::span<const std::size_t> keep) {
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= dims.size()) {
      throw DimensionError("partial_trace: subsystem index " +
                           std::to_string(keep[i]) + " out of range for " +
                           to_string(dims));
    }
    if (i > 0 && keep[i] <= keep[i - 1]) {
      throw DimensionError("partial_trace: keep must be ascending and unique");
    }
  }
}

void check_permutation(const Dims& dims, std::span<const std::size_t> perm) {
  if (perm.size() != dims.size()) {
    throw DimensionError("permute: permutation length mismatch");
  }
  std::vector<bool> seen(dims.size(), false);
  for (auto p : perm) {
    if (p >= dims.size() || seen[p]) {
      throw DimensionError("permute: not a permutation");
    }
    seen[p] = true;
  }
}

namespace {

std::vector<std::size_t> decode(std::size_t index, const Dims& dims) {
  std::vector<std::size_t> digits(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    digits[k] = index % dims[k];
    index /= dims[k];
  }
  return digits;
}

std::size_t encode(const std::vector<std::size_t>& digits, const Dims& dims) {
  std::size_t index = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) index = index * dims[k] + digits[k];
  return index;
}

}  // namespace

namespace serial {

Matrix kron(const Matrix& a, const Matrix& b) {
  const auto ra = a.rows(), ca = a.cols(), rb = b.rows(), cb = b.cols();
  Matrix out(ra * rb, ca * cb);
  for (Eigen::Index i = 0; i < ra; ++i)
    for (Eigen::Index j = 0; j < ca; ++j)
      for (Eigen::Index k = 0; k < rb; ++k)
        for (Eigen::Index l = 0; l < cb; ++l)
          out(i * rb + k, j * cb + l) = a(i, j) * b(k, l);
  return out;
}

Matrix partial_trace(const Matrix& m, const Dims& dims,
                     std::span<const std::size_t> keep) {
  check_keep(dims, keep);
  Dims kept_dims;
  for (auto k : keep) kept_dims.push_back(dims[k]);
  const std::size_t kept = product(kept_dims);
  const std::size_t total = product(dims);

  std::vector<bool> is_kept(dims.size(), false);
  for (auto k : keep) is_kept[k] = true;

  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(kept),
                            static_cast<Eigen::Index>(kept));
  // Sum m[r, c] over all (r, c) whose traced digits coincide.
  for (std::size_t r = 0; r < total; ++r) {
    const auto rd = decode(r, dims);
    for (std::size_t c = 0; c < total; ++c) {
      const auto cd = decode(c, dims);
      bool diagonal = true;
      std::vector<std::size_t> ro, co;
      for (std::size_t k = 0; k < dims.size(); ++k) {
        if (is_kept[k]) {
          ro.push_back(rd[k]);
          co.push_back(cd[k]);
        } else if (rd[k] != cd[k]) {
          diagonal = false;
          break;
        }
      }
      if (!diagonal) continue;
      out(static_cast<Eigen::Index>(encode(ro, kept_dims)),
          static_cast<Eigen::Index>(encode(co, kept_dims))) +=
          m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
  }
  return out;
}

Matrix permute(const Matrix& m, const Dims& dims,
               std::span<const std::size_t> perm) {
  check_permutation(dims, perm);
  Dims out_dims(dims.size());
  for (std::size_t i = 0; i < perm.size(); ++i) out_dims[i] = dims[perm[i]];
  const std::size_t total = product(dims);
  Matrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < total; ++r) {
    const auto rd = decode(r, out_dims);
    std::vector<std::size_t> src_r(dims.size());
    for (std::size_t i = 0; i < perm.size(); ++i) src_r[perm[i]] = rd[i];
    for (std::size_t c = 0; c < total; ++c) {
      const auto cd = decode(c, out_dims);
      std::vector<std::size_t> src_c(dims.size());
      for (std::size_t i = 0; i < perm.size(); ++i) src_c[perm[i]] = cd[i];
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          m(static_cast<Eigen::Index>(encode(src_r, dims)),
            static_cast<Eigen::Index>(encode(src_c, dims)));
    }
  }
  return out;
}

Matrix depolarize(const Matrix& m, const Dims& dims, std::size_t k, double p) {
  if (k >= dims.size()) throw DimensionError("depolarize: subsystem out of range");
  const std::size_t total = product(dims);
  const double d = static_cast<double>(dims[k]);
  Matrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < total; ++r) {
    const auto rd = decode(r, dims);
    for (std::size_t c = 0; c < total; ++c) {
      const auto cd = decode(c, dims);
      Complex reduced = 0.0;
      if (rd[k] == cd[k]) {
        auto rs = rd, cs = cd;
        for (std::size_t x = 0; x < dims[k]; ++x) {
          rs[k] = x;
          cs[k] = x;
          reduced += m(static_cast<Eigen::Index>(encode(rs, dims)),
                       static_cast<Eigen::Index>(encode(cs, dims)));
        }
      }
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          (1.0 - p) * m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) +
          p * reduced / d;
    }
  }
  return out;
}

}  // namespace serial
}  // namespace subtime::qcore::kernels
