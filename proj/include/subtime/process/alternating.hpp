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

#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "subtime/process/process_matrix.hpp"

namespace subtime::process {

struct ProcessPair {
  ProcessMatrix ab;
  ProcessMatrix ba;
};

/// Time-parametrized pair (W_AB(t), W_BA(t)); t in dimensionless ticks.
class ProcessFamily {
 public:
  using Generator = std::function<ProcessPair(double)>;

  ProcessFamily(Generator generator, double period);

  ProcessPair at(double t) const { return generator_(t); }
  double period() const noexcept { return period_; }

 private:
  Generator generator_;
  double period_;
};

class GeneratorError : public std::runtime_error {
 public:
  GeneratorError(double t, const std::string& what);
  double time() const noexcept { return t_; }

 private:
  double t_;
};

struct DualityReport {
  double max_deviation = 0.0;  ///< max_t || W_BA(t) - W_AB(-t)^dagger ||
  double worst_time = 0.0;
  bool holds = false;          ///< max_deviation < tol
};

/// Samples the time-reversal duality W_BA(t) = W_AB(-t)^dagger on `ts`.
DualityReport check_duality(const ProcessFamily& fam, std::span<const double> ts,
                            double tol = 1e-12);

enum class Interpolation {
  /// Weights cos^2(wt/2), sin^2(wt/2) between the two orientations.
  Continuous,
  /// Full forward orientation for phase in [0, pi), reversed for [pi, 2 pi).
  DiscreteSwap,
};

/**
 * Periodic family alternating between `w_fwd` and its party-swapped image.
 *
 * W_AB(t) = V(t) [c(t) w_fwd + s(t) swap(w_fwd)] V(t)^dagger with the phase
 * gate V(t) = diag(1, e^{i w t}, ...) on both input ports, and
 * W_BA(t) := W_AB(-t)^dagger. Every member is a valid process matrix, the
 * period is 2 pi / omega and W_AB(0) = w_fwd.
 */
ProcessFamily build_alternating_family(const ProcessMatrix& w_fwd, double omega,
                                       Interpolation mode = Interpolation::Continuous);

/// `count` evenly spaced samples over `periods` periods starting at 0.
std::vector<double> time_grid(double period, double periods, std::size_t count);

}  // namespace subtime::process
