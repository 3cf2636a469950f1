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

#include <catch_amalgamated.hpp>

#include <array>
#include <cmath>
#include <random>

#include "subtime/photonclock/cascade.hpp"
#include "subtime/photonclock/causal_box.hpp"
#include "subtime/photonclock/echo.hpp"
#include "subtime/photonclock/ledger.hpp"
#include "subtime/photonclock/rcp.hpp"
#include "subtime/qcore/linalg.hpp"
#include "subtime/qcore/random.hpp"

using namespace subtime;
using namespace subtime::photonclock;
using Catch::Matchers::WithinAbs;
using qcore::Rng;

namespace {

SubtimeLedger ledger_of(std::initializer_list<std::pair<int, bool>> items) {
  SubtimeLedger l;
  for (auto [v, d] : items) l.append(v, d);
  return l;
}

std::vector<double> grid(double lo, double hi, int count) {
  std::vector<double> ts;
  for (int k = 0; k < count; ++k) ts.push_back(lo + (hi - lo) * k / (count - 1));
  return ts;
}

// Full 2^n state-vector simulation of the hopping chain, independent of the
// single-excitation reduction used by cascade(). Qubit 0 is the most
// significant bit.
std::vector<double> full_space_return(int n, double step, int horizon) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  qcore::Matrix h = qcore::Matrix::Zero(dim, dim);
  for (Eigen::Index s = 0; s < dim; ++s) {
    for (int k = 0; k + 1 < n; ++k) {
      const Eigen::Index bk = Eigen::Index{1} << (n - 1 - k);
      const Eigen::Index bk1 = Eigen::Index{1} << (n - 2 - k);
      // sigma+_k sigma-_{k+1} + h.c.: move an excitation between k and k+1.
      if ((s & bk) && !(s & bk1)) h(s ^ bk ^ bk1, s) += 1.0;
      if (!(s & bk) && (s & bk1)) h(s ^ bk ^ bk1, s) += 1.0;
    }
  }
  const qcore::Matrix u = qcore::expm(qcore::Complex(0, -step) * h);
  qcore::Vector psi = qcore::Vector::Zero(dim);
  const Eigen::Index start = Eigen::Index{1} << (n - 1);
  psi(start) = 1.0;
  std::vector<double> out;
  qcore::Vector cur = psi;
  for (int t = 1; t <= horizon; ++t) {
    cur = u * cur;
    out.push_back(std::norm(cur(start)));
  }
  return out;
}

}  // namespace

TEST_CASE("classical_time", "[photonclock]") {
  CHECK(classical_time(ledger_of({{1, false}, {-1, false}})) == 0.0);
  CHECK(classical_time(ledger_of({{1, false}, {-1, false}, {1, true}})) == 1.0);
  // Runs (+1 -1 +1 -1) and (+1 +1) evaluated by hand.
  const auto l = ledger_of({{1, false}, {-1, false}, {1, false}, {-1, true}, {1, false}, {1, true}});
  CHECK(classical_time(l) == 2.0);
  CHECK(bare_classical_time(l) == 2.0);
  CHECK(bare_classical_time(ledger_of({{1, true}, {-1, true}})) == 0.0);
  CHECK(classical_time(ledger_of({{1, true}, {-1, true}})) == 2.0);
  CHECK_THROWS_AS(SubtimeLedger({{2, false}}), std::invalid_argument);
  SubtimeLedger bad;
  CHECK_THROWS_AS(bad.append(0), std::invalid_argument);
}

TEST_CASE("classical_time is non-negative and non-decreasing", "[photonclock][property]") {
  Rng rng(21);
  std::bernoulli_distribution coin(0.5), rare(0.2);
  for (int trial = 0; trial < 50; ++trial) {
    SubtimeLedger l;
    double previous = 0.0;
    for (int seg = 0; seg < 20; ++seg) {
      const int len = 1 + static_cast<int>(rng() % 6);
      for (int k = 0; k < len - 1; ++k) l.append(coin(rng) ? 1 : -1, rare(rng));
      l.append(coin(rng) ? 1 : -1, true);
      const double now = classical_time(l);
      CHECK(now >= previous);
      previous = now;
    }
    CHECK(l.traversal_count() == l.increments().size());
  }
}

TEST_CASE("balanced coherent ledgers have zero classical time", "[photonclock][property]") {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Increment> incs;
    const int half = 1 + static_cast<int>(rng() % 50);
    for (int k = 0; k < half; ++k) {
      incs.push_back({1, false});
      incs.push_back({-1, false});
    }
    std::shuffle(incs.begin(), incs.end(), rng);
    SubtimeLedger l(incs);
    CHECK(classical_time(l) == 0.0);
    l.append(1, true);
    CHECK(classical_time(l) == 1.0);
  }
}

TEST_CASE("bounce", "[photonclock]") {
  SECTION("alternating ledger") {
    CausalBox box(BoxConfig{});
    for (int k = 0; k < 3; ++k) box.bounce();
    const auto& incs = box.ledger().increments();
    REQUIRE(incs.size() == 3);
    CHECK(incs[0].value == 1);
    CHECK(incs[1].value == -1);
    CHECK(incs[2].value == 1);
    CHECK(box.heading() == Heading::BToA);
  }
  SECTION("two bounces return the state") {
    BoxConfig cfg;
    cfg.polarization = true;
    CausalBox box(cfg);
    const auto before = box.photon();
    box = bounce(bounce(box));
    CHECK_THAT(qcore::fidelity(before, box.photon()), WithinAbs(1.0, 1e-12));
    // One bounce flips the direction qubit: orthogonal state.
    CHECK_THAT(qcore::fidelity(before, bounce(box).photon()), WithinAbs(0.0, 1e-12));
  }
  SECTION("decohered flags replay the seeded Bernoulli draws") {
    BoxConfig cfg;
    cfg.decoherence = 0.1;
    cfg.seed = 2026;
    CausalBox box(cfg);
    for (int k = 0; k < 100; ++k) box.bounce();
    Rng oracle(2026);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::size_t expected = 0;
    for (int k = 0; k < 100; ++k) expected += u(oracle) < 0.1 ? 1 : 0;
    CHECK(box.ledger().decohered_count() == expected);
    // Binomial(100, 0.1): mean 10, sigma 3.
    CHECK(std::abs(static_cast<double>(expected) - 10.0) <= 9.0);
  }
  SECTION("depolarizing bounce keeps a valid state and mixes it") {
    BoxConfig cfg;
    cfg.decoherence = 0.2;
    CausalBox box(cfg);
    for (int k = 0; k < 50; ++k) box.bounce();
    CHECK(qcore::von_neumann_entropy(box.photon()) > 0.9);
  }
  SECTION("an imperfect mirror lets the photon escape") {
    BoxConfig cfg;
    cfg.reflectivity_b = 0.0;
    CausalBox box(cfg);
    box.bounce();
    CHECK(box.escaped());
    CHECK(box.ledger().increments().back().decohered);
    box.bounce();
    CHECK(box.ledger().traversal_count() == 1);
    CHECK(classical_time(box.ledger()) == 1.0);
  }
  SECTION("configuration checks") {
    BoxConfig cfg;
    cfg.decoherence = 1.5;
    CHECK_THROWS_AS(CausalBox(cfg), std::invalid_argument);
    CHECK_THROWS_AS(CausalBox(DensityMatrix::basis(3, 0), Heading::AToB, BoxConfig{}),
                    qcore::DimensionError);
  }
}

TEST_CASE("check_nondiscernability", "[photonclock]") {
  BoxConfig cfg;
  cfg.polarization = true;
  Rng rng(3);
  const CausalBox box(qcore::random_density({2, 2}, rng), Heading::AToB, cfg);
  CHECK(check_nondiscernability(box, 1));
  CHECK(check_nondiscernability(box, 1000));
  cfg.decoherence = 0.01;
  CHECK_THROWS_AS(check_nondiscernability(CausalBox(cfg), 1), std::logic_error);
  BoxConfig leaky;
  leaky.reflectivity_a = 0.9;
  CHECK_THROWS_AS(check_nondiscernability(CausalBox(leaky), 1), std::logic_error);
}

TEST_CASE("break_symmetry", "[photonclock]") {
  SECTION("deterministic weights") {
    CausalBox box(BoxConfig{});
    BoundaryConditions forward{{1.0, 0.0, 0.0, 0.0}};
    for (int k = 0; k < 100; ++k) {
      const double before = classical_time(box.ledger());
      CHECK(break_symmetry(box, forward) == BreakOutcome::ForwardDiamond);
      CHECK(classical_time(box.ledger()) == before + 1.0);
    }
    BoundaryConditions last{{0.0, 0.0, 0.0, 1.0}};
    CHECK(break_symmetry(box, last) == BreakOutcome::SimultaneousAbsorption);
  }
  SECTION("uniform weights within 3 sigma and matching a replayed draw") {
    BoxConfig cfg;
    cfg.seed = 99;
    CausalBox box(cfg);
    std::array<int, 4> counts{};
    std::array<int, 4> oracle{};
    Rng replay(99);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const int n = 10000;
    for (int k = 0; k < n; ++k) {
      ++counts[static_cast<std::size_t>(break_symmetry(box, BoundaryConditions{}))];
      ++oracle[std::min<std::size_t>(3, static_cast<std::size_t>(u(replay) / 0.25))];
    }
    CHECK(counts == oracle);
    const double sigma = std::sqrt(n * 0.25 * 0.75);
    for (int c : counts) CHECK(std::abs(c - n * 0.25) <= 3.0 * sigma);
  }
  SECTION("simultaneous outcomes record a net-zero pair") {
    CausalBox box(BoxConfig{});
    BoundaryConditions emission{{0.0, 0.0, 1.0, 0.0}};
    break_symmetry(box, emission);
    REQUIRE(box.ledger().traversal_count() == 2);
    CHECK(classical_time(box.ledger()) == 0.0);
    CHECK(box.ledger().increments()[1].decohered);
  }
  SECTION("invalid weights") {
    CausalBox box(BoxConfig{});
    CHECK_THROWS_AS(break_symmetry(box, BoundaryConditions{{0.5, 0.5, 0.5, 0.0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(break_symmetry(box, BoundaryConditions{{1.5, -0.5, 0.0, 0.0}}),
                    std::invalid_argument);
  }
}

TEST_CASE("RCP operator", "[photonclock]") {
  Rng rng(8);
  const qcore::ComplexOperator h(qcore::random_hermitian(4, rng), {2, 2});
  const qcore::Vector psi = qcore::ginibre(4, 1, rng).col(0).normalized();

  SECTION("R(0) is the identity") {
    for (double eps : {0.0, 0.3}) {
      const auto op = RcpOperator::dual(h, eps);
      CHECK((rcp_apply(op, 0.0, psi) - psi).norm() < 1e-14);
    }
  }
  SECTION("dual generators without damping conserve the invariant") {
    const auto op = RcpOperator::dual(h, 0.0);
    const auto report = rcp_invariant(op, psi, grid(0.0, 10.0, 101));
    CHECK(report.constant);
    CHECK(report.spread < 1e-10);
    CHECK(duality_residual(op, grid(0.0, 10.0, 101)) < 1e-12);
  }
  SECTION("damping matches the closed form and decays monotonically") {
    // With G = I and dual generators R(t) = U(t) (1 + e^{-eps t}) / 2.
    const auto op = RcpOperator::dual(h, 0.01);
    const auto ts = grid(0.0, 10.0, 101);
    const auto report = rcp_invariant(op, psi, ts);
    for (std::size_t k = 0; k < ts.size(); ++k) {
      const double oracle = 0.25 * std::pow(1.0 + std::exp(-0.01 * ts[k]), 2);
      CHECK_THAT(report.values[k], WithinAbs(oracle, 1e-12));
      if (k > 0) CHECK(report.values[k] < report.values[k - 1]);
    }
    CHECK_FALSE(report.constant);
  }
  SECTION("drift is ordered in epsilon") {
    const auto ts = grid(0.05, 5.0, 100);
    const auto low = rcp_invariant(RcpOperator::dual(h, 0.01), psi, ts);
    const auto high = rcp_invariant(RcpOperator::dual(h, 0.02), psi, ts);
    for (std::size_t k = 0; k < ts.size(); ++k) {
      CHECK(low.drift[k] > 0.0);
      CHECK(high.drift[k] > low.drift[k]);
    }
  }
  SECTION("mismatched generators break the invariant") {
    const qcore::ComplexOperator h2(qcore::random_hermitian(4, rng), {2, 2});
    const RcpOperator op(h, h2, 0.0);
    const auto ts = grid(0.0, 10.0, 101);
    CHECK_FALSE(rcp_invariant(op, psi, ts).constant);
    CHECK(duality_residual(op, ts) > 1e-3);
  }
  SECTION("errors") {
    CHECK_THROWS_AS(rcp_apply(RcpOperator::dual(h, 0.0), 1.0, qcore::Vector::Zero(3)),
                    qcore::DimensionError);
    CHECK_THROWS_AS(RcpOperator::dual(h, -0.1), qcore::ValidationError);
    qcore::Matrix nh = h.matrix();
    nh(0, 1) += 1.0;
    CHECK_THROWS_AS(RcpOperator(qcore::ComplexOperator(nh, {2, 2}), h, 0.0),
                    qcore::ValidationError);
  }
}

TEST_CASE("RCP invariant is constant iff dual and undamped", "[photonclock][property]") {
  Rng rng(44);
  const auto ts = grid(0.0, 10.0, 41);
  for (int trial = 0; trial < 20; ++trial) {
    const qcore::ComplexOperator ha(qcore::random_hermitian(2, rng));
    const qcore::ComplexOperator hb(qcore::random_hermitian(2, rng));
    const qcore::Vector psi = qcore::ginibre(2, 1, rng).col(0).normalized();
    const double eps = trial % 2 == 0 ? 0.0 : 0.05;
    const bool dual = trial % 4 < 2;
    const RcpOperator op(ha, dual ? ha : hb, eps);
    const bool exact = eps == 0.0 && duality_residual(op, ts) < 1e-12;
    CHECK(rcp_invariant(op, psi, ts).constant == exact);
  }
}

TEST_CASE("cascade", "[photonclock]") {
  SECTION("two sites return exactly at the round-trip step") {
    const auto r = cascade({.n = 2, .noise = 0.0, .horizon = 16});
    CHECK_THAT(r.best_fidelity, WithinAbs(1.0, 1e-12));
    CHECK(r.best_step == 8);
  }
  SECTION("single-excitation sector matches the full state-vector simulation") {
    for (int n : {2, 3, 4, 5}) {
      const auto r = cascade({.n = n, .noise = 0.0, .horizon = 40});
      const auto oracle = full_space_return(n, std::numbers::pi / 8, 40);
      for (std::size_t k = 0; k < oracle.size(); ++k) {
        CHECK_THAT(r.fidelity[k], WithinAbs(oracle[k], 1e-10));
      }
    }
  }
  SECTION("larger chains return worse") {
    std::vector<CascadeConfig> cfgs;
    for (int n = 2; n <= 6; ++n) cfgs.push_back({.n = n, .noise = 0.0, .horizon = 36});
    const auto reports = cascade_sweep(cfgs);
    CHECK(reports[0].best_fidelity > 0.99);
    for (std::size_t k = 1; k < reports.size(); ++k) {
      CHECK(reports[k].best_fidelity <= reports[k - 1].best_fidelity + 1e-12);
    }
    CHECK(reports.back().best_fidelity <= reports.front().best_fidelity);
  }
  SECTION("noise lowers the best return") {
    const auto clean = cascade({.n = 4, .noise = 0.0, .horizon = 64});
    const auto noisy = cascade({.n = 4, .noise = 0.05, .horizon = 64});
    CHECK(noisy.best_fidelity < clean.best_fidelity);
  }
  SECTION("errors") {
    CHECK_THROWS_AS(cascade({.n = 1}), std::invalid_argument);
    CHECK_THROWS_AS(cascade({.n = 13}), std::invalid_argument);
    CHECK_THROWS_AS(cascade({.n = 3, .noise = 2.0}), std::invalid_argument);
    CHECK_THROWS_AS(cascade({.n = 3, .noise = 0.0, .horizon = 0}), std::invalid_argument);
  }
}

TEST_CASE("wf_echo", "[photonclock]") {
  CHECK(wf_echo(1.0, 8.0).delta_s == 0.0);
  CHECK(wf_echo(0.0, 8.0).delta_s == 8.0);
  const auto half = wf_echo(0.5, 8.0);
  CHECK(half.i_reflected == 4.0);
  CHECK(half.delta_s == 4.0);
  CHECK_THROWS_AS(wf_echo(1.1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(wf_echo(-0.1, 1.0), std::invalid_argument);

  Rng rng(10);
  std::uniform_real_distribution<double> ua(0.0, 1.0), ui(0.0, 1e6);
  for (int k = 0; k < 1000; ++k) {
    const double a = ua(rng), i = ui(rng);
    const auto r = wf_echo(a, i);
    CHECK(r.i_reflected + r.delta_s == i);
    CHECK(r.delta_s >= 0.0);
  }
}
