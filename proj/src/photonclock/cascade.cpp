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

#include "subtime/photonclock/cascade.hpp"

#include <exception>
#include <stdexcept>

#include "subtime/qcore/linalg.hpp"

namespace subtime::photonclock {

using qcore::Complex;
using qcore::Matrix;

Matrix hopping_hamiltonian(int n, double coupling) {
  Matrix h = Matrix::Zero(n, n);
  for (int k = 0; k + 1 < n; ++k) {
    h(k, k + 1) = coupling;
    h(k + 1, k) = coupling;
  }
  return h;
}

CascadeReport cascade(const CascadeConfig& config) {
  const int n = config.n;
  if (n < 2 || n > kMaxCascadeSites) {
    throw std::invalid_argument("cascade: n must be in [2, " +
                                std::to_string(kMaxCascadeSites) + "]");
  }
  if (config.horizon < 1) throw std::invalid_argument("cascade: horizon must be >= 1");
  if (!(config.noise >= 0.0 && config.noise <= 1.0)) {
    throw std::invalid_argument("cascade: noise outside [0,1]");
  }
  const Matrix u =
      qcore::expm(Complex(0.0, -config.step) * hopping_hamiltonian(n, config.coupling));
  const Matrix mixed = Matrix::Identity(n, n) / static_cast<double>(n);

  Matrix rho = Matrix::Zero(n, n);
  rho(0, 0) = 1.0;

  CascadeReport report;
  report.n = n;
  report.noise = config.noise;
  report.horizon = config.horizon;
  report.fidelity.reserve(static_cast<std::size_t>(config.horizon));
  for (int step = 1; step <= config.horizon; ++step) {
    rho = u * rho * u.adjoint();
    if (config.noise > 0.0) rho = (1.0 - config.noise) * rho + config.noise * mixed;
    // Fidelity with the pure initial state is its diagonal weight.
    const double f = rho(0, 0).real();
    report.fidelity.push_back(f);
    if (f > report.best_fidelity) {
      report.best_fidelity = f;
      report.best_step = step;
    }
  }
  return report;
}

std::vector<CascadeReport> cascade_sweep(std::span<const CascadeConfig> configs) {
  std::vector<CascadeReport> out(configs.size());
  std::vector<std::exception_ptr> errors(configs.size());
  const auto count = static_cast<std::ptrdiff_t>(configs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      out[k] = cascade(configs[k]);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace subtime::photonclock
