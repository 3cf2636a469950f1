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

#include "subtime/process/alternating.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "subtime/qcore/linalg.hpp"

namespace subtime::process {

ProcessFamily::ProcessFamily(Generator generator, double period)
    : generator_(std::move(generator)), period_(period) {
  if (!(period > 0.0)) throw std::invalid_argument("ProcessFamily: period must be > 0");
  if (!generator_) throw std::invalid_argument("ProcessFamily: empty generator");
}

GeneratorError::GeneratorError(double t, const std::string& what)
    : std::runtime_error("process family generator failed at t=" + std::to_string(t) +
                         ": " + what),
      t_(t) {}

namespace {

ProcessPair sample(const ProcessFamily& fam, double t) {
  try {
    return fam.at(t);
  } catch (const std::exception& e) {
    throw GeneratorError(t, e.what());
  }
}

}  // namespace

DualityReport check_duality(const ProcessFamily& fam, std::span<const double> ts,
                            double tol) {
  if (ts.empty()) throw std::invalid_argument("check_duality: empty time grid");
  DualityReport report;
  for (double t : ts) {
    const ProcessPair now = sample(fam, t);
    const ProcessPair mirrored = sample(fam, -t);
    const Matrix ba = now.ba.canonical().matrix();
    const Matrix ab = mirrored.ab.canonical().matrix();
    const double dev = qcore::spectral_norm(ba - ab.adjoint());
    if (dev > report.max_deviation) {
      report.max_deviation = dev;
      report.worst_time = t;
    }
  }
  report.holds = report.max_deviation < tol;
  return report;
}

ProcessFamily build_alternating_family(const ProcessMatrix& w_fwd, double omega,
                                       Interpolation mode) {
  if (!(omega > 0.0)) throw std::invalid_argument("build_alternating_family: omega must be > 0");
  const auto report = validate_ocb(w_fwd);
  if (!report.valid) {
    throw qcore::ValidationError("build_alternating_family: forward process is not valid");
  }
  const ProcessMatrix fwd = w_fwd.canonical();
  const ProcessMatrix rev = swap_parties(fwd);
  const std::size_t da = fwd.dim(Role::AIn);
  const std::size_t db = fwd.dim(Role::BIn);
  const auto dao = static_cast<Eigen::Index>(fwd.dim(Role::AOut));
  const auto dbo = static_cast<Eigen::Index>(fwd.dim(Role::BOut));

  auto forward = [=](double t) {
    const double phi = omega * t;
    double c = 0.0;
    if (mode == Interpolation::Continuous) {
      c = std::cos(0.5 * phi);
      c *= c;
    } else {
      const double wrapped = phi - 2.0 * std::numbers::pi * std::floor(phi / (2.0 * std::numbers::pi));
      c = wrapped < std::numbers::pi ? 1.0 : 0.0;
    }
    const Matrix mix = c * fwd.matrix() + (1.0 - c) * rev.matrix();
    const Matrix v = qcore::kron({qcore::gates::phase(da, phi),
                                          Matrix::Identity(dao, dao),
                                          qcore::gates::phase(db, phi),
                                          Matrix::Identity(dbo, dbo)});
    return ProcessMatrix(ComplexOperator(v * mix * v.adjoint(), fwd.op().dims()));
  };

  auto generator = [forward](double t) {
    ProcessMatrix ab = forward(t);
    ProcessMatrix ba(qcore::dagger(forward(-t).op()));
    return ProcessPair{std::move(ab), std::move(ba)};
  };
  return ProcessFamily(generator, 2.0 * std::numbers::pi / omega);
}

std::vector<double> time_grid(double period, double periods, std::size_t count) {
  std::vector<double> ts(count);
  if (count == 0) return ts;
  const double span = period * periods;
  const double step = count > 1 ? span / static_cast<double>(count - 1) : 0.0;
  for (std::size_t i = 0; i < count; ++i) ts[i] = step * static_cast<double>(i);
  return ts;
}

}  // namespace subtime::process
