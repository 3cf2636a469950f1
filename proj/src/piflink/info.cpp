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

#include "subtime/piflink/info.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

namespace subtime::piflink {

namespace {

constexpr double kTotalTol = 1e-12;

void check_distribution(std::span<const double> p) {
  double total = 0.0;
  for (double x : p) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
      throw DistributionError("distribution has a negative or non-finite entry");
    }
    total += x;
  }
  if (std::abs(total - 1.0) > kTotalTol) throw DistributionError("distribution does not sum to 1");
}

double entropy_unchecked(std::span<const double> p) {
  double h = 0.0;
  for (double x : p) {
    if (x > 0.0) h -= x * std::log2(x);
  }
  return h;
}

}  // namespace

JointDistribution::JointDistribution(Eigen::MatrixXd p) : p_(std::move(p)) {
  if (p_.size() == 0) throw DistributionError("JointDistribution: empty table");
  check_distribution(std::span<const double>(p_.data(), static_cast<std::size_t>(p_.size())));
}

JointDistribution JointDistribution::from_counts(const Eigen::MatrixXd& counts) {
  const double total = counts.sum();
  if (!(total > 0.0)) throw DistributionError("JointDistribution: empty count table");
  if (counts.minCoeff() < 0.0) throw DistributionError("JointDistribution: negative count");
  return JointDistribution(counts / total);
}

double shannon_entropy(std::span<const double> dist) {
  check_distribution(dist);
  return entropy_unchecked(dist);
}

double shannon_entropy(const Eigen::VectorXd& dist) {
  return shannon_entropy(std::span<const double>(dist.data(), static_cast<std::size_t>(dist.size())));
}

double binary_entropy(double p) {
  const double d[] = {p, 1.0 - p};
  return shannon_entropy(d);
}

double mutual_information(const JointDistribution& j) {
  const Eigen::MatrixXd& p = j.p();
  const double hxy =
      entropy_unchecked(std::span<const double>(p.data(), static_cast<std::size_t>(p.size())));
  const Eigen::VectorXd px = j.marginal_x(), py = j.marginal_y();
  const double hx = entropy_unchecked(std::span<const double>(px.data(), px.size()));
  const double hy = entropy_unchecked(std::span<const double>(py.data(), py.size()));
  return std::max(0.0, hx + hy - hxy);
}

double symmetry_check(const JointDistribution& j) {
  const Eigen::MatrixXd& p = j.p();
  if (p.rows() != p.cols()) throw DistributionError("symmetry_check: alphabets differ");
  return (p - p.transpose()).cwiseAbs().maxCoeff();
}

double symmetry_tolerance(const JointDistribution& j, double samples) {
  if (!(samples > 0.0)) throw std::invalid_argument("symmetry_tolerance: samples must be > 0");
  const Eigen::MatrixXd& p = j.p();
  if (p.rows() != p.cols()) throw DistributionError("symmetry_tolerance: alphabets differ");
  // Var(n_xy - n_yx) / N^2 under multinomial sampling.
  double worst = 0.0;
  for (Eigen::Index x = 0; x < p.rows(); ++x) {
    for (Eigen::Index y = x + 1; y < p.cols(); ++y) {
      const double a = p(x, y), b = p(y, x);
      worst = std::max(worst, (a + b - (a - b) * (a - b)) / samples);
    }
  }
  return 3.0 * std::sqrt(worst);
}

double unreflected_entropy(double i_transmitted, double i_reflected) {
  if (i_reflected > i_transmitted) {
    throw std::invalid_argument("unreflected_entropy: reflected exceeds transmitted");
  }
  return i_transmitted - i_reflected;
}

double landauer_cost(double bits_erased, double temperature_kelvin) {
  if (!(bits_erased >= 0.0)) throw std::invalid_argument("landauer_cost: bits_erased < 0");
  if (!(temperature_kelvin > 0.0)) throw std::invalid_argument("landauer_cost: temperature <= 0");
  return bits_erased * kBoltzmann * temperature_kelvin * std::numbers::ln2;
}

}  // namespace subtime::piflink
