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

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "subtime/piflink/info.hpp"
#include "subtime/piflink/slice.hpp"

namespace subtime::piflink {

enum class LinkMode { PIF, FITO };

std::string_view to_string(LinkMode mode);
/// Accepts "pif" and "fito" in any case.
std::optional<LinkMode> parse_link_mode(std::string_view s);

struct LinkConfig {
  std::uint64_t slice_count = 10000;
  double bit_flip_forward = 0.0;
  double bit_flip_backward = 0.0;
  double echo_loss = 0.0;
  std::uint64_t seed = 0;
  double temperature_kelvin = 300.0;
  LinkMode mode = LinkMode::PIF;
};

/// Throws std::invalid_argument for probabilities outside [0,1], a
/// non-positive temperature or zero slices.
void validate(const LinkConfig& cfg);

/**
 * Cumulative information bookkeeping, in bits.
 *
 * i_plus accumulates information carried forward and i_minus the information
 * carried back, signed negative because it flows toward the sender; the
 * conservation law then reads dI_+ + dI_- = 0. Every other field is >= 0.
 */
struct InfoLedger {
  double i_plus = 0.0;
  double i_minus = 0.0;
  double i_transmitted = 0.0;
  double i_reflected = 0.0;
  double h_in = 0.0;   ///< entropy of the bits sent
  double h_out = 0.0;  ///< entropy of the bits received
  double delta_s = 0.0;
  double landauer_joules = 0.0;
};

/// max over consecutive entries of |dI_+ + dI_-|. Throws std::invalid_argument
/// for fewer than two entries.
double conservation_check(std::span<const InfoLedger> series);

/// Per-cycle |dI_+ + dI_-|, one entry shorter than the series.
std::vector<double> conservation_profile(std::span<const InfoLedger> series);

struct LinkReport {
  LinkConfig config;
  InfoLedger ledger;               ///< totals
  std::vector<InfoLedger> series;  ///< cumulative, entry k after k cycles (k = 0..n)

  std::uint64_t forward_corrupted = 0;   ///< slices with a forward bit flip
  std::uint64_t backward_corrupted = 0;  ///< echoes with a backward bit flip
  std::uint64_t injected = 0;            ///< slices corrupted on either leg
  std::uint64_t detected = 0;            ///< echo-verification mismatches
  std::uint64_t undetected = 0;          ///< corrupted slices accepted as good
  std::uint64_t echoes_lost = 0;
  std::uint64_t buffer_drops = 0;
  double throughput = 0.0;  ///< accepted slices per simulated round trip

  double forward_rate = 0.0;    ///< I(sent; received) per bit
  double reflected_rate = 0.0;  ///< per-bit information returned to the sender
  JointDistribution forward_joint{Eigen::MatrixXd::Identity(2, 2) / 2.0};
  double symmetry_deviation = 0.0;
  double symmetry_tolerance = 0.0;
};

/// Independent, reproducible RNG stream for one concern of a seeded run.
enum class Stream : std::uint64_t { Payload = 0, ForwardNoise = 1, BackwardNoise = 2, EchoLoss = 3 };
std::uint64_t stream_seed(std::uint64_t seed, Stream stream);

/**
 * Slice-clocked simulation of one link run.
 *
 * Each cycle the sender emits one slice with a random payload and keeps a
 * copy. Payload bits flip independently on the forward leg. In PIF mode the
 * receiver buffers the slice and returns echo(received); the echo may be
 * lost, and otherwise its bits flip on the backward leg. The sender applies
 * echo to what comes back and compares with its copy: a mismatch is a
 * detected event and the receiver drops its buffered slice (a 64-bit
 * erasure). In FITO mode nothing returns, every corrupted slice is accepted
 * and overwrites receiver state.
 *
 * Information rates use per-bit empirical joints aggregated over the run:
 * forward_rate from (sent, received) and reflected_rate from (sent, returned)
 * capped at forward_rate. Payloads, forward noise, backward noise and echo
 * loss draw from separate streams, so PIF and FITO runs with one seed see
 * identical forward corruption.
 */
LinkReport run_link(const LinkConfig& cfg);

struct CapacityReport {
  double c_one_way = 0.0;  ///< analytic bits per slice-cycle, forward leg
  double c_pif = 0.0;      ///< analytic total over both directions
  double ratio = 0.0;      ///< c_pif / c_one_way, 0 when c_one_way is 0
  double mc_one_way = 0.0; ///< Monte Carlo estimate of c_one_way
  double mc_pif = 0.0;     ///< Monte Carlo estimate of c_pif
  double mc_ratio = 0.0;
};

/**
 * Per-direction capacity of the binary symmetric legs, in bits per 64-bit
 * slice-cycle: 64 (1 - H2(p)) per direction, the backward leg scaled by the
 * echo survival probability. Monte Carlo estimates measure the empirical
 * mutual information of `mc_bits` uniformly random bits per direction.
 */
CapacityReport capacity(const LinkConfig& cfg, std::uint64_t mc_bits = 100000);

}  // namespace subtime::piflink
