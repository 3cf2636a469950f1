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

#include "subtime/process/process_tensor.hpp"

#include <algorithm>
#include <utility>

#include "subtime/qcore/linalg.hpp"
#include "subtime/qcore/quantum.hpp"

namespace subtime::process {

using qcore::ComplexOperator;

ProcessTensor::ProcessTensor(std::vector<ComplexOperator> steps)
    : steps_(std::move(steps)) {
  if (steps_.empty()) throw qcore::DimensionError("ProcessTensor: no steps");
  for (const auto& s : steps_) {
    if (s.dims() != steps_.front().dims()) {
      throw qcore::DimensionError("ProcessTensor: inconsistent step dims");
    }
  }
}

ProcessTensor ProcessTensor::reversed_adjoint() const {
  std::vector<ComplexOperator> out;
  out.reserve(steps_.size());
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) out.push_back(qcore::dagger(*it));
  return ProcessTensor(std::move(out));
}

TensorDecomposition decompose_process_tensor(const ProcessTensor& tens) {
  const ProcessTensor mirror = tens.reversed_adjoint();
  std::vector<ComplexOperator> fwd, rev;
  double residual = 0.0;
  for (std::size_t i = 0; i < tens.size(); ++i) {
    const ComplexOperator& t = tens.steps()[i];
    const ComplexOperator& r = mirror.steps()[i];
    const ComplexOperator sym = 0.5 * (t + r);
    const ComplexOperator anti = 0.5 * (t - r);
    residual = std::max(residual, qcore::spectral_norm(anti.matrix()));
    ComplexOperator minus = 0.5 * sym;
    // T_+ = T - T_- keeps the sum exact to rounding of a single subtraction.
    fwd.push_back(t - minus);
    rev.push_back(std::move(minus));
  }
  return TensorDecomposition{ProcessTensor(std::move(fwd)), ProcessTensor(std::move(rev)),
                             residual};
}

double max_step_distance(const ProcessTensor& a, const ProcessTensor& b) {
  if (a.size() != b.size()) throw qcore::DimensionError("max_step_distance: step count mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    d = std::max(d, qcore::spectral_norm((a.steps()[i] - b.steps()[i]).matrix()));
  }
  return d;
}

}  // namespace subtime::process
