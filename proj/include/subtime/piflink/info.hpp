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
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

namespace subtime::piflink {

inline constexpr double kBoltzmann = 1.380649e-23;  // J/K, exact in SI

class DistributionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Joint distribution p(x, y); rows index x, columns index y.
class JointDistribution {
 public:
  /// Throws DistributionError on negative entries or a total off 1 by > 1e-12.
  explicit JointDistribution(Eigen::MatrixXd p);

  /// Normalizes a table of non-negative counts.
  static JointDistribution from_counts(const Eigen::MatrixXd& counts);

  const Eigen::MatrixXd& p() const noexcept { return p_; }
  Eigen::VectorXd marginal_x() const { return p_.rowwise().sum(); }
  Eigen::VectorXd marginal_y() const { return p_.colwise().sum().transpose(); }
  JointDistribution swapped() const { return JointDistribution(p_.transpose()); }

 private:
  Eigen::MatrixXd p_;
};

/// -sum p log2 p with 0 log 0 = 0. Throws DistributionError on invalid input.
double shannon_entropy(std::span<const double> dist);
double shannon_entropy(const Eigen::VectorXd& dist);

/// Binary entropy H2(p) in bits.
double binary_entropy(double p);

/// H(X) + H(Y) - H(X,Y), clamped at 0 against round-off.
double mutual_information(const JointDistribution& j);

/// max |p(x,y) - p(y,x)|. Throws DistributionError for non-square joints.
double symmetry_check(const JointDistribution& j);

/// Three-sigma multinomial tolerance for symmetry_check on an empirical
/// joint estimated from `samples` draws.
double symmetry_tolerance(const JointDistribution& j, double samples);

/// i_transmitted - i_reflected. Throws std::invalid_argument when the
/// reflected amount exceeds the transmitted one.
double unreflected_entropy(double i_transmitted, double i_reflected);

/// bits * k_B * T * ln 2. Throws std::invalid_argument for negative bits or
/// non-positive temperature.
double landauer_cost(double bits_erased, double temperature_kelvin);

}  // namespace subtime::piflink
