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

#include "subtime/piflink/link.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace subtime::piflink {

namespace {

constexpr double kSliceBits = 64.0;

using Rng = std::mt19937_64;

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string("LinkConfig: ") + name + " outside [0,1]");
  }
}

// Flip mask with each of the 64 bits set independently with probability p.
std::uint64_t flip_mask(Rng& rng, double p) {
  if (p <= 0.0) return 0;
  std::bernoulli_distribution flip(p);
  std::uint64_t mask = 0;
  for (int b = 0; b < 64; ++b) {
    if (flip(rng)) mask |= std::uint64_t{1} << b;
  }
  return mask;
}

// Adds per-bit (x, y) occurrences to a 2x2 count table.
void tally(Eigen::MatrixXd& counts, std::uint64_t x, std::uint64_t y) {
  const int ones_x = std::popcount(x), ones_y = std::popcount(y);
  const int both = std::popcount(x & y);
  counts(1, 1) += both;
  counts(1, 0) += ones_x - both;
  counts(0, 1) += ones_y - both;
  counts(0, 0) += 64 - ones_x - ones_y + both;
}

double rate_of(const Eigen::MatrixXd& counts) {
  if (counts.sum() <= 0.0) return 0.0;
  return mutual_information(JointDistribution::from_counts(counts));
}

double entropy_of(const Eigen::VectorXd& counts) {
  const double total = counts.sum();
  if (total <= 0.0) return 0.0;
  return shannon_entropy(Eigen::VectorXd(counts / total));
}

}  // namespace

std::string_view to_string(LinkMode mode) { return mode == LinkMode::PIF ? "pif" : "fito"; }

std::optional<LinkMode> parse_link_mode(std::string_view s) {
  std::string lower(s);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "pif") return LinkMode::PIF;
  if (lower == "fito") return LinkMode::FITO;
  return std::nullopt;
}

void validate(const LinkConfig& cfg) {
  if (cfg.slice_count == 0) throw std::invalid_argument("LinkConfig: slice_count must be > 0");
  check_probability(cfg.bit_flip_forward, "bit_flip_forward");
  check_probability(cfg.bit_flip_backward, "bit_flip_backward");
  check_probability(cfg.echo_loss, "echo_loss");
  if (!(cfg.temperature_kelvin > 0.0)) {
    throw std::invalid_argument("LinkConfig: temperature must be > 0");
  }
}

std::vector<double> conservation_profile(std::span<const InfoLedger> series) {
  if (series.size() < 2) throw std::invalid_argument("conservation_check: need >= 2 entries");
  std::vector<double> out;
  out.reserve(series.size() - 1);
  for (std::size_t k = 1; k < series.size(); ++k) {
    const double d_plus = series[k].i_plus - series[k - 1].i_plus;
    const double d_minus = series[k].i_minus - series[k - 1].i_minus;
    out.push_back(std::abs(d_plus + d_minus));
  }
  return out;
}

double conservation_check(std::span<const InfoLedger> series) {
  const auto profile = conservation_profile(series);
  return *std::max_element(profile.begin(), profile.end());
}

std::uint64_t stream_seed(std::uint64_t seed, Stream stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (std::uint64_t{words[0]} << 32) | words[1];
}

LinkReport run_link(const LinkConfig& cfg) {
  validate(cfg);
  Rng payload_rng(stream_seed(cfg.seed, Stream::Payload));
  Rng forward_rng(stream_seed(cfg.seed, Stream::ForwardNoise));
  Rng backward_rng(stream_seed(cfg.seed, Stream::BackwardNoise));
  Rng loss_rng(stream_seed(cfg.seed, Stream::EchoLoss));
  std::bernoulli_distribution lose(cfg.echo_loss);
  const bool pif = cfg.mode == LinkMode::PIF;

  LinkReport report;
  report.config = cfg;

  // Per-cycle events, turned into cumulative information once the per-bit
  // rates of the whole run are known.
  std::vector<std::uint8_t> echoed(cfg.slice_count, 0);
  std::vector<std::uint8_t> erased(cfg.slice_count, 0);
  std::vector<std::uint8_t> accepted(cfg.slice_count, 0);

  Eigen::MatrixXd forward_counts = Eigen::MatrixXd::Zero(2, 2);
  Eigen::MatrixXd roundtrip_counts = Eigen::MatrixXd::Zero(2, 2);
  Eigen::VectorXd sent_counts = Eigen::VectorXd::Zero(2);
  Eigen::VectorXd received_counts = Eigen::VectorXd::Zero(2);

  for (std::uint64_t k = 0; k < cfg.slice_count; ++k) {
    const Slice sent{payload_from_bits(payload_rng()), k, Direction::Forward};
    const std::uint64_t x = payload_bits(sent.payload);

    const std::uint64_t fwd_mask = flip_mask(forward_rng, cfg.bit_flip_forward);
    Slice received = sent;
    received.payload = payload_from_bits(x ^ fwd_mask);
    const std::uint64_t y = payload_bits(received.payload);
    tally(forward_counts, x, y);
    sent_counts(1) += std::popcount(x);
    sent_counts(0) += 64 - std::popcount(x);
    received_counts(1) += std::popcount(y);
    received_counts(0) += 64 - std::popcount(y);

    const bool fwd_bad = fwd_mask != 0;
    report.forward_corrupted += fwd_bad ? 1 : 0;

    if (!pif) {
      report.injected += fwd_bad ? 1 : 0;
      report.undetected += fwd_bad ? 1 : 0;
      erased[k] = fwd_bad ? 1 : 0;
      accepted[k] = 1;
      continue;
    }

    if (lose(loss_rng)) {
      // The sender times out; the slice is neither verified nor accepted.
      ++report.echoes_lost;
      report.injected += fwd_bad ? 1 : 0;
      continue;
    }
    Slice reply = echo(received);
    const std::uint64_t bwd_mask = flip_mask(backward_rng, cfg.bit_flip_backward);
    if (bwd_mask != 0) {
      ++report.backward_corrupted;
      // Bits travel reversed by byte on the return leg; the mask applies to
      // the wire image.
      reply.payload = payload_from_bits(payload_bits(reply.payload) ^ bwd_mask);
    }
    const bool corrupted = fwd_bad || bwd_mask != 0;
    report.injected += corrupted ? 1 : 0;

    const Slice restored = echo(reply);
    tally(roundtrip_counts, x, payload_bits(restored.payload));
    echoed[k] = 1;
    if (restored != sent) {
      ++report.detected;
      ++report.buffer_drops;
      erased[k] = 1;
    } else {
      accepted[k] = 1;
      // Opposite flips on both legs can cancel and pass verification.
      report.undetected += corrupted ? 1 : 0;
    }
  }

  report.forward_joint = JointDistribution::from_counts(forward_counts);
  report.forward_rate = rate_of(forward_counts);
  report.reflected_rate = pif ? std::min(rate_of(roundtrip_counts), report.forward_rate) : 0.0;
  report.symmetry_deviation = symmetry_check(report.forward_joint);
  report.symmetry_tolerance =
      symmetry_tolerance(report.forward_joint, static_cast<double>(cfg.slice_count) * kSliceBits);
  const double h_in_rate = entropy_of(sent_counts);
  const double h_out_rate = entropy_of(received_counts);
  const double erase_joules = landauer_cost(kSliceBits, cfg.temperature_kelvin);

  report.series.reserve(cfg.slice_count + 1);
  report.series.emplace_back();
  std::uint64_t n_echoed = 0, n_erased = 0, n_accepted = 0;
  for (std::uint64_t k = 0; k < cfg.slice_count; ++k) {
    n_echoed += echoed[k];
    n_erased += erased[k];
    n_accepted += accepted[k];
    const double bits_sent = static_cast<double>(k + 1) * kSliceBits;
    InfoLedger l;
    l.i_transmitted = bits_sent * report.forward_rate;
    l.i_reflected = static_cast<double>(n_echoed) * kSliceBits * report.reflected_rate;
    l.i_plus = l.i_transmitted;
    l.i_minus = -l.i_reflected;
    l.h_in = bits_sent * h_in_rate;
    l.h_out = bits_sent * h_out_rate;
    l.delta_s = unreflected_entropy(l.i_transmitted, l.i_reflected);
    l.landauer_joules = static_cast<double>(n_erased) * erase_joules;
    report.series.push_back(l);
  }
  report.ledger = report.series.back();
  report.throughput = static_cast<double>(n_accepted) / static_cast<double>(cfg.slice_count);
  return report;
}

CapacityReport capacity(const LinkConfig& cfg, std::uint64_t mc_bits) {
  validate(cfg);
  if (mc_bits == 0) throw std::invalid_argument("capacity: mc_bits must be > 0");
  CapacityReport r;
  const double survive = 1.0 - cfg.echo_loss;
  r.c_one_way = kSliceBits * (1.0 - binary_entropy(cfg.bit_flip_forward));
  const double c_back = kSliceBits * survive * (1.0 - binary_entropy(cfg.bit_flip_backward));
  r.c_pif = r.c_one_way + c_back;
  r.ratio = r.c_one_way > 0.0 ? r.c_pif / r.c_one_way : 0.0;

  // Monte Carlo: uniform inputs through each leg; a lost echo is an erasure
  // symbol (column 2) carrying no information about the input.
  Rng rng(stream_seed(cfg.seed, Stream::Payload));
  std::bernoulli_distribution coin(0.5), fwd(cfg.bit_flip_forward),
      bwd(cfg.bit_flip_backward), lose(cfg.echo_loss);
  Eigen::MatrixXd f = Eigen::MatrixXd::Zero(2, 2);
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(2, 3);
  for (std::uint64_t i = 0; i < mc_bits; ++i) {
    const int x = coin(rng) ? 1 : 0;
    f(x, x ^ (fwd(rng) ? 1 : 0)) += 1.0;
    const int u = coin(rng) ? 1 : 0;
    const bool lost = lose(rng);
    const bool flipped = bwd(rng);
    b(u, lost ? 2 : (u ^ (flipped ? 1 : 0))) += 1.0;
  }
  r.mc_one_way = kSliceBits * rate_of(f);
  r.mc_pif = r.mc_one_way + kSliceBits * rate_of(b);
  r.mc_ratio = r.mc_one_way > 0.0 ? r.mc_pif / r.mc_one_way : 0.0;
  return r;
}

}  // namespace subtime::piflink
