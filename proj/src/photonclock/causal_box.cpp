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

#include "subtime/photonclock/causal_box.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <utility>

namespace subtime::photonclock {

using qcore::ComplexOperator;
using qcore::Matrix;
namespace gates = qcore::gates;

namespace {

void check_unit(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::invalid_argument(std::string("CausalBox: ") + what + " outside [0,1]");
  }
}

DensityMatrix default_photon(bool polarization) {
  if (!polarization) return DensityMatrix::basis(2, 0);
  return DensityMatrix::pure(qcore::kron({gates::ket(2, 0), gates::plus()}), {2, 2});
}

}  // namespace

CausalBox::CausalBox(const BoxConfig& config)
    : CausalBox(default_photon(config.polarization), Heading::AToB, config) {}

CausalBox::CausalBox(DensityMatrix photon, Heading heading, const BoxConfig& config)
    : config_(config),
      initial_(photon),
      photon_(std::move(photon)),
      heading_(heading),
      rng_(config.seed) {
  check_unit(config.reflectivity_a, "reflectivity_a");
  check_unit(config.reflectivity_b, "reflectivity_b");
  check_unit(config.decoherence, "decoherence");
  const std::size_t expected = config.polarization ? 4 : 2;
  if (photon_.side() != expected) {
    throw qcore::DimensionError("CausalBox: photon state dimension does not match config");
  }
  // Mirror reflection reverses momentum (X on direction) and the field phase
  // (Z on polarization).
  reflection_ = config.polarization ? qcore::kron({gates::pauli_x(), gates::pauli_z()})
                                    : gates::pauli_x();
}

void CausalBox::bounce() {
  if (escaped_) return;
  const int tick = heading_ == Heading::AToB ? 1 : -1;
  const double reflectivity =
      heading_ == Heading::AToB ? config_.reflectivity_b : config_.reflectivity_a;
  std::uniform_real_distribution<double> uniform(0.0, 1.0);

  if (reflectivity < 1.0 && uniform(rng_) < 1.0 - reflectivity) {
    // The traversal happened but the photon left: an irreversible record.
    ledger_.append(tick, true);
    escaped_ = true;
    return;
  }
  const bool decohered = uniform(rng_) < config_.decoherence;
  ledger_.append(tick, decohered);

  const double p = config_.decoherence;
  Matrix next = reflection_ * photon_.matrix() * reflection_.adjoint();
  if (p > 0.0) {
    const auto d = static_cast<double>(next.rows());
    next = (1.0 - p) * next + (p / d) * Matrix::Identity(next.rows(), next.cols());
  }
  photon_ = DensityMatrix(ComplexOperator(std::move(next), photon_.dims()));
  heading_ = heading_ == Heading::AToB ? Heading::BToA : Heading::AToB;
}

CausalBox bounce(CausalBox box) {
  box.bounce();
  return box;
}

bool check_nondiscernability(const CausalBox& box, int k_cycles) {
  const auto& cfg = box.config();
  if (cfg.decoherence > 0.0) {
    throw std::logic_error("check_nondiscernability: requires zero decoherence");
  }
  if (cfg.reflectivity_a < 1.0 || cfg.reflectivity_b < 1.0) {
    throw std::logic_error("check_nondiscernability: requires perfect mirrors");
  }
  if (k_cycles < 0) throw std::invalid_argument("check_nondiscernability: k_cycles < 0");
  CausalBox copy = box;
  const DensityMatrix start = copy.photon();
  for (int k = 1; k <= k_cycles; ++k) {
    copy.bounce();
    copy.bounce();
    if (std::abs(1.0 - qcore::fidelity(start, copy.photon())) > 1e-10) return false;
  }
  return true;
}

std::string_view to_string(BreakOutcome outcome) {
  switch (outcome) {
    case BreakOutcome::ForwardDiamond: return "forward_diamond";
    case BreakOutcome::ReversedDiamond: return "reversed_diamond";
    case BreakOutcome::SimultaneousEmission: return "simultaneous_emission";
    case BreakOutcome::SimultaneousAbsorption: return "simultaneous_absorption";
  }
  return "unknown";
}

BreakOutcome break_symmetry(CausalBox& box, const BoundaryConditions& boundary) {
  double sum = 0.0;
  for (double w : boundary.weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw std::invalid_argument("break_symmetry: weights must be finite and >= 0");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw std::invalid_argument("break_symmetry: weights must sum to 1");

  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  const double u = uniform(box.rng());
  std::size_t pick = 3;
  double cumulative = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    cumulative += boundary.weights[k];
    if (u < cumulative && boundary.weights[k] > 0.0) {
      pick = k;
      break;
    }
  }
  // Guard against round-off leaving u above the final cumulative weight.
  while (boundary.weights[pick] == 0.0) --pick;

  const auto outcome = static_cast<BreakOutcome>(pick);
  auto& ledger = box.ledger();
  switch (outcome) {
    case BreakOutcome::ForwardDiamond: ledger.append(1, true); break;
    case BreakOutcome::ReversedDiamond: ledger.append(-1, true); break;
    case BreakOutcome::SimultaneousEmission:
      ledger.append(1, false);
      ledger.append(-1, true);
      break;
    case BreakOutcome::SimultaneousAbsorption:
      ledger.append(-1, false);
      ledger.append(1, true);
      break;
  }
  return outcome;
}

}  // namespace subtime::photonclock
