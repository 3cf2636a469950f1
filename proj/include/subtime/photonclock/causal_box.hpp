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

#include <array>
#include <cstdint>
#include <string_view>

#include "subtime/photonclock/ledger.hpp"
#include "subtime/qcore/quantum.hpp"
#include "subtime/qcore/random.hpp"

namespace subtime::photonclock {

using qcore::DensityMatrix;

enum class Heading { AToB, BToA };

struct BoxConfig {
  double reflectivity_a = 1.0;  ///< mirror at A, hit by B->A traversals
  double reflectivity_b = 1.0;  ///< mirror at B, hit by A->B traversals
  double decoherence = 0.0;     ///< per-bounce depolarizing strength and flag probability
  bool polarization = false;    ///< carry a polarization qubit, starting in |+>
  std::uint64_t seed = 0;
};

/**
 * Photon bouncing between two mirrors.
 *
 * The direction qubit is |0> for A->B and |1> for B->A; the optional
 * polarization qubit follows it. Per bounce the RNG is consumed in a fixed
 * order: one uniform draw for escape (only when the struck mirror has
 * reflectivity below 1), then one uniform draw for the decohered flag.
 */
class CausalBox {
 public:
  explicit CausalBox(const BoxConfig& config);
  /// Custom initial photon state of dimension 2, or 4 with polarization.
  CausalBox(DensityMatrix photon, Heading heading, const BoxConfig& config);

  void bounce();

  const DensityMatrix& photon() const noexcept { return photon_; }
  const DensityMatrix& initial_photon() const noexcept { return initial_; }
  const SubtimeLedger& ledger() const noexcept { return ledger_; }
  SubtimeLedger& ledger() noexcept { return ledger_; }
  Heading heading() const noexcept { return heading_; }
  bool escaped() const noexcept { return escaped_; }
  const BoxConfig& config() const noexcept { return config_; }
  qcore::Rng& rng() noexcept { return rng_; }

 private:
  BoxConfig config_;
  DensityMatrix initial_;
  DensityMatrix photon_;
  qcore::Matrix reflection_;
  Heading heading_;
  SubtimeLedger ledger_;
  qcore::Rng rng_;
  bool escaped_ = false;
};

/// Functional form of CausalBox::bounce.
CausalBox bounce(CausalBox box);

/**
 * True iff every even bounce count 2k, k = 1..k_cycles, returns the photon to
 * its initial state with fidelity 1 within 1e-10. Operates on a copy.
 * Throws std::logic_error unless decoherence is 0 and both mirrors are perfect.
 */
bool check_nondiscernability(const CausalBox& box, int k_cycles);

enum class BreakOutcome {
  ForwardDiamond,
  ReversedDiamond,
  SimultaneousEmission,
  SimultaneousAbsorption,
};

std::string_view to_string(BreakOutcome outcome);

/// Outcome weights, in BreakOutcome order.
struct BoundaryConditions {
  std::array<double, 4> weights{0.25, 0.25, 0.25, 0.25};
};

/**
 * Sample a classical configuration and record it in the ledger.
 *
 * Forward appends a decohered +1 and reversed a decohered -1. The
 * simultaneous cases append a net-zero pair closed by a decoherence event:
 * emission as [+1, -1*] and absorption as [-1, +1*]. One uniform draw from
 * the box RNG is compared against the cumulative weights.
 * Throws std::invalid_argument unless weights are >= 0 and sum to 1.
 */
BreakOutcome break_symmetry(CausalBox& box, const BoundaryConditions& boundary);

}  // namespace subtime::photonclock
