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

#include <span>
#include <vector>

#include "subtime/qcore/operator.hpp"

namespace subtime::photonclock {

inline constexpr int kMaxCascadeSites = 12;
inline constexpr int kDefaultCascadeHorizon = 64;

struct CascadeConfig {
  int n = 2;
  double noise = 0.0;  ///< depolarizing strength per step
  int horizon = kDefaultCascadeHorizon;
  double coupling = 1.0;
  double step = 0.39269908169872414;  ///< pi / 8
};

struct CascadeReport {
  int n = 0;
  double noise = 0.0;
  int horizon = 0;
  double best_fidelity = 0.0;
  int best_step = 0;
  std::vector<double> fidelity;  ///< return fidelity after steps 1..horizon
};

/**
 * One excitation hopping along an open chain of n two-level atoms.
 *
 * The excitation starts on site 0 and evolves under nearest-neighbour
 * hopping with uniform coupling, one exp(-i H step) per step. Because the
 * hopping conserves excitation number the state stays in the n-dimensional
 * single-excitation sector, where it is tracked as a density matrix. Noise
 * acts after every step as rho -> (1 - p) rho + p I/n within that sector.
 * The best return fidelity is taken over steps 1..horizon; ties keep the
 * earliest step.
 *
 * Throws std::invalid_argument for n < 2, n > kMaxCascadeSites, horizon < 1
 * or noise outside [0,1].
 */
CascadeReport cascade(const CascadeConfig& config);

/// Independent cascade runs, evaluated in parallel.
std::vector<CascadeReport> cascade_sweep(std::span<const CascadeConfig> configs);

/// Hopping Hamiltonian restricted to the single-excitation sector.
qcore::Matrix hopping_hamiltonian(int n, double coupling);

}  // namespace subtime::photonclock
