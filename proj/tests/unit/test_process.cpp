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

#include <cmath>
#include <numbers>

#include "subtime/process/alternating.hpp"
#include "subtime/process/process_matrix.hpp"
#include "subtime/process/process_tensor.hpp"
#include "subtime/process/quantum_switch.hpp"
#include "subtime/qcore/linalg.hpp"
#include "subtime/qcore/random.hpp"

using namespace subtime;
using namespace subtime::process;
using qcore::Dims;
using qcore::Rng;
using Catch::Matchers::WithinAbs;

namespace {

double dist(const Matrix& a, const Matrix& b) { return qcore::spectral_norm(a - b); }

ProcessMatrix random_forward(Rng& rng) {
  const auto c = qcore::random_channel(2, 2, rng, 2);
  const auto rho = qcore::random_density({2}, rng);
  return from_channel_order(c, rng() % 2 ? Order::AB : Order::BA, rho);
}

// Identity channels A_out -> B_in and B_out -> A_in at once.
ProcessMatrix causal_loop() {
  Vector phi = Vector::Zero(4);
  phi(0) = 1.0;
  phi(3) = 1.0;
  const Matrix bell = phi * phi.adjoint();
  const ComplexOperator raw(qcore::kron({bell, bell}), {2, 2, 2, 2});  // Ao Bi Bo Ai
  const std::size_t perm[] = {3, 0, 1, 2};
  return ProcessMatrix(qcore::permute_subsystems(raw, perm));
}

Matrix skew_hermitian(std::size_t d, double norm, Rng& rng) {
  Matrix k = qcore::Complex(0, 1) * qcore::random_hermitian(d, rng);
  return k * (norm / qcore::spectral_norm(k));
}

}  // namespace

TEST_CASE("ProcessMatrix labels", "[process]") {
  const auto id = ComplexOperator::identity({2, 2, 2, 2});
  CHECK_THROWS_AS(ProcessMatrix(id, {Role::AIn, Role::AIn, Role::BIn, Role::BOut}),
                  qcore::DimensionError);
  CHECK_THROWS_AS(ProcessMatrix(ComplexOperator::identity({2, 2, 2})), qcore::DimensionError);
  const ProcessMatrix shuffled(ComplexOperator::identity({2, 3, 2, 2}),
                               {Role::BOut, Role::AIn, Role::AOut, Role::BIn});
  CHECK(shuffled.dim(Role::AIn) == 3);
  CHECK(shuffled.canonical().op().dims() == Dims{3, 2, 2, 2});
}

TEST_CASE("validate_ocb", "[process]") {
  Rng rng(314);
  SECTION("definite-order processes are valid") {
    for (int trial = 0; trial < 20; ++trial) {
      const auto report = validate_ocb(random_forward(rng));
      CHECK(report.valid);
      CHECK(report.normalization_deviation < 1e-9);
      CHECK(report.causal_deviation < 1e-9);
      CHECK(report.min_eigenvalue > -1e-9);
    }
  }
  SECTION("the traced switch is valid") {
    for (int trial = 0; trial < 5; ++trial) {
      const auto sw = build_quantum_switch(qcore::random_unitary(2, rng),
                                           qcore::random_unitary(2, rng));
      const auto report = validate_ocb(
          sw.traced_process(qcore::random_density({2}, rng), qcore::random_density({2}, rng)));
      CHECK(report.valid);
      CHECK(report.normalization_deviation < 1e-9);
      CHECK(report.causal_deviation < 1e-9);
    }
  }
  SECTION("zero matrix fails normalization") {
    const auto report = validate_ocb(ProcessMatrix(ComplexOperator::zero({2, 2, 2, 2})));
    CHECK_FALSE(report.valid);
    CHECK_THAT(report.normalization_deviation, WithinAbs(1.0, 1e-12));
  }
  SECTION("a causal loop is normalized but not admissible") {
    const auto report = validate_ocb(causal_loop());
    CHECK(report.normalization_deviation < 1e-12);
    CHECK(report.min_eigenvalue > -1e-12);
    CHECK(report.causal_deviation > 0.1);
    CHECK_FALSE(report.valid);
  }
  SECTION("non-Hermitian candidates fail") {
    ProcessMatrix w = random_forward(rng);
    Matrix m = w.matrix();
    m(0, 1) += 0.1;
    const auto report = validate_ocb(ProcessMatrix(ComplexOperator(m, {2, 2, 2, 2})));
    CHECK(report.hermiticity_deviation > 0.05);
    CHECK_FALSE(report.valid);
  }
}

TEST_CASE("link product", "[process]") {
  const auto zero = qcore::DensityMatrix::basis(2, 0);
  const auto w = from_channel_order(Channel::identity(2), Order::AB, zero);
  SECTION("bit flip sent by Alice") {
    // Oracle: (1-p)|0><0| + p|1><1| with p = 0.3.
    const auto received = bob_input(w, Channel::bit_flip(0.3));
    Matrix oracle = Matrix::Zero(2, 2);
    oracle(0, 0) = 0.7;
    oracle(1, 1) = 0.3;
    CHECK(dist(received.matrix(), oracle) < 1e-12);
  }
  SECTION("swapping parties exchanges roles") {
    const auto swapped = swap_parties(w);
    const auto received = alice_input(swapped, Channel::bit_flip(1.0));
    CHECK(dist(received.matrix(), qcore::DensityMatrix::basis(2, 1).matrix()) < 1e-12);
    CHECK(dist(swap_parties(swapped).matrix(), w.matrix()) == 0.0);
  }
  SECTION("probabilities sum to one over a measurement") {
    // Alice measures Z and reprepares; Bob measures Z. Oracle computed by hand.
    Rng rng(9);
    const auto c = qcore::random_channel(2, 2, rng);
    const auto rho = qcore::random_density({2}, rng);
    const auto pw = from_channel_order(c, Order::AB, rho);
    double total = 0.0;
    for (std::size_t a = 0; a < 2; ++a) {
      for (std::size_t b = 0; b < 2; ++b) {
        const Matrix pa = qcore::DensityMatrix::basis(2, a).matrix();
        const Matrix pb = qcore::DensityMatrix::basis(2, b).matrix();
        const Matrix ma = qcore::kron({pa, pa});
        const Matrix mb = qcore::kron({pb, 0.5 * qcore::gates::identity()});
        const double p = contract_local(pw.op(), ma, mb).matrix()(0, 0).real();
        const auto after_c = qcore::apply_channel(c, qcore::DensityMatrix::basis(2, a));
        const double oracle = rho.matrix()(a, a).real() * after_c.matrix()(b, b).real();
        CHECK_THAT(p, WithinAbs(oracle, 1e-12));
        total += p;
      }
    }
    CHECK_THAT(total, WithinAbs(1.0, 1e-12));
  }
}

TEST_CASE("two-way marginals", "[process]") {
  Rng rng(6);
  const auto rho_a = qcore::random_density({2}, rng);
  const auto rho_b = qcore::random_density({2}, rng);
  const auto c = qcore::random_channel(2, 2, rng);
  // B goes first in w_ab and so receives rho_b directly; A does in w_ba.
  const auto w_ab = from_channel_order(c, Order::BA, rho_b);
  const auto w_ba = from_channel_order(c, Order::AB, rho_a);
  const auto report = check_two_way(w_ab, w_ba, rho_a, rho_b);
  CHECK(report.holds);
  CHECK(report.deviation < 1e-12);
  CHECK_FALSE(check_two_way(w_ba, w_ab, rho_a, rho_b).holds);
}

TEST_CASE("alternating family duality", "[process][property]") {
  Rng rng(1234);
  for (int trial = 0; trial < 6; ++trial) {
    const ProcessMatrix w = random_forward(rng);
    for (double omega : {0.5, 1.0, 2.0}) {
      const auto fam = build_alternating_family(w, omega);
      CHECK_THAT(fam.period(), WithinAbs(2.0 * std::numbers::pi / omega, 1e-15));
      const auto ts = time_grid(fam.period(), 2.0, 64);
      REQUIRE(ts.size() == 64);
      const auto report = check_duality(fam, ts);
      CHECK(report.holds);
      CHECK(report.max_deviation < 1e-12);
    }
  }
}

TEST_CASE("duality detects skew-Hermitian perturbations", "[process]") {
  Rng rng(55);
  const auto fam = build_alternating_family(random_forward(rng), 1.0);
  const Matrix k = skew_hermitian(16, 1e-3, rng);
  const ProcessFamily perturbed(
      [&](double t) {
        ProcessPair p = fam.at(t);
        p.ba = ProcessMatrix(ComplexOperator(p.ba.matrix() + k, {2, 2, 2, 2}));
        return p;
      },
      fam.period());
  const auto report = check_duality(perturbed, time_grid(fam.period(), 2.0, 64));
  CHECK_FALSE(report.holds);
  CHECK(report.max_deviation >= 5e-4);
  CHECK(report.max_deviation <= 2e-3);
}

TEST_CASE("alternating family members", "[process][property]") {
  Rng rng(8);
  const ProcessMatrix w = random_forward(rng);
  for (auto mode : {Interpolation::Continuous, Interpolation::DiscreteSwap}) {
    const auto fam = build_alternating_family(w, 2.0, mode);
    CHECK(dist(fam.at(0.0).ab.matrix(), w.canonical().matrix()) < 1e-12);
    for (double t : time_grid(fam.period(), 1.0, 12)) {
      const auto pair = fam.at(t);
      CHECK(validate_ocb(pair.ab).valid);
      CHECK(validate_ocb(pair.ba).valid);
      CHECK(dist(fam.at(t + fam.period()).ab.matrix(), pair.ab.matrix()) < 1e-9);
    }
  }
  CHECK_THROWS_AS(build_alternating_family(w, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(build_alternating_family(causal_loop(), 1.0), qcore::ValidationError);
}

TEST_CASE("generator failures carry the failing time", "[process]") {
  const ProcessFamily bad([](double t) -> ProcessPair {
    if (t > 0.5) throw std::runtime_error("boom");
    const auto w = ProcessMatrix(ComplexOperator::identity({2, 2, 2, 2}));
    return {w, w};
  },
                          1.0);
  const double ts[] = {0.0, 0.75};
  try {
    check_duality(bad, ts);
    FAIL("expected GeneratorError");
  } catch (const GeneratorError& e) {
    CHECK(std::abs(std::abs(e.time()) - 0.75) < 1e-15);
  }
}

TEST_CASE("quantum switch", "[process]") {
  const auto plus = qcore::DensityMatrix::pure(qcore::gates::plus());
  const Vector minus = qcore::gates::minus();
  const Vector plus_v = qcore::gates::plus();
  SECTION("anticommuting pair flips the control") {
    const auto sw = build_quantum_switch(qcore::gates::pauli_x(), qcore::gates::pauli_z());
    for (std::size_t i = 0; i < 2; ++i) {
      const auto target = qcore::DensityMatrix::basis(2, i);
      CHECK_THAT(sw.control_probability(target, plus, minus), WithinAbs(1.0, 1e-10));
    }
  }
  SECTION("commuting pair keeps the control") {
    const auto sw = build_quantum_switch(qcore::gates::pauli_z(), qcore::gates::pauli_z());
    CHECK_THAT(sw.control_probability(qcore::DensityMatrix::basis(2, 0), plus, plus_v),
               WithinAbs(1.0, 1e-10));
  }
  SECTION("brute-force evolution oracle") {
    // (|0>_c U_b U_a |psi> + |1>_c U_a U_b |psi>) / sqrt 2, built by hand.
    Rng rng(4);
    const Matrix ua = qcore::random_unitary(2, rng), ub = qcore::random_unitary(2, rng);
    const Vector psi = qcore::ginibre(2, 1, rng).col(0).normalized();
    Vector out = Vector::Zero(4);
    const Vector b0 = ub * ua * psi, b1 = ua * ub * psi;
    for (int t = 0; t < 2; ++t) {
      out(2 * t + 0) = b0(t) / std::sqrt(2.0);
      out(2 * t + 1) = b1(t) / std::sqrt(2.0);
    }
    const auto sw = build_quantum_switch(ua, ub);
    CHECK(dist(sw.output(qcore::DensityMatrix::pure(psi), plus).matrix(),
               out * out.adjoint()) < 1e-12);
  }
  SECTION("full process contraction reproduces the output") {
    Rng rng(77);
    for (int trial = 0; trial < 5; ++trial) {
      const Matrix ua = qcore::random_unitary(2, rng), ub = qcore::random_unitary(2, rng);
      const auto sw = build_quantum_switch(ua, ub);
      const auto target = qcore::random_density({2}, rng);
      const auto control = qcore::random_density({2}, rng);
      const auto contracted =
          contract_local(sw.full_process(target, control), Channel::unitary(ua).choi().matrix(),
                         Channel::unitary(ub).choi().matrix());
      CHECK(dist(contracted.matrix(), sw.output(target, control).matrix()) < 1e-12);
    }
  }
  SECTION("invalid inputs") {
    CHECK_THROWS_AS(build_quantum_switch(qcore::gates::identity(2), qcore::gates::identity(3)),
                    qcore::DimensionError);
    Matrix nonunitary = qcore::gates::identity();
    nonunitary(0, 0) = 2.0;
    CHECK_THROWS_AS(build_quantum_switch(nonunitary, qcore::gates::identity()),
                    qcore::ValidationError);
  }
}

TEST_CASE("AC versus ICO entropy series are non-decreasing", "[process][property]") {
  Rng rng(2);
  const Matrix ua = qcore::random_unitary(2, rng), ub = qcore::random_unitary(2, rng);
  const double noises[] = {0.0, 0.01, 0.05, 0.1};
  const auto reports = ac_vs_ico_sweep(ua, ub, noises, 20);
  REQUIRE(reports.size() == 4);
  for (const auto& r : reports) {
    REQUIRE(r.ac_entropy.size() == 21);
    REQUIRE(r.ico_entropy.size() == 21);
    for (std::size_t s = 1; s < r.ac_entropy.size(); ++s) {
      CHECK(r.ac_entropy[s] >= r.ac_entropy[s - 1] - 1e-10);
      CHECK(r.ico_entropy[s] >= r.ico_entropy[s - 1] - 1e-10);
    }
  }
  CHECK_THAT(reports[0].ac_final, WithinAbs(0.0, 1e-9));
  CHECK_THAT(reports[0].ico_final, WithinAbs(0.0, 1e-9));
  CHECK(reports[3].ac_final > reports[1].ac_final);
  CHECK_THROWS_AS(ac_vs_ico_entropy(ua, ub, 1.5, 3), std::invalid_argument);
}

TEST_CASE("process tensor decomposition", "[process]") {
  Rng rng(12);
  std::vector<ComplexOperator> steps;
  for (int i = 0; i < 4; ++i) steps.emplace_back(qcore::ginibre(4, 4, rng), Dims{2, 2});
  const ProcessTensor tens(steps);
  const auto dec = decompose_process_tensor(tens);
  SECTION("reconstruction is exact") {
    for (std::size_t i = 0; i < tens.size(); ++i) {
      const Matrix sum = dec.forward.steps()[i].matrix() + dec.reverse.steps()[i].matrix();
      CHECK(dist(sum, tens.steps()[i].matrix()) < 1e-13);
    }
  }
  SECTION("generic tensors report a residual") { CHECK(dec.duality_residual > 0.1); }
  SECTION("self-dual tensors satisfy T_- = R(T_+)") {
    const Matrix h1 = qcore::random_hermitian(4, rng), h2 = qcore::random_hermitian(4, rng);
    const ProcessTensor sym({ComplexOperator(h1, {2, 2}), ComplexOperator(h2, {2, 2}),
                             ComplexOperator(h1, {2, 2})});
    const auto d = decompose_process_tensor(sym);
    CHECK(d.duality_residual < 1e-15);
    CHECK(max_step_distance(d.reverse, d.forward.reversed_adjoint()) < 1e-14);
  }
  SECTION("reversed adjoint is an involution") {
    CHECK(max_step_distance(tens.reversed_adjoint().reversed_adjoint(), tens) == 0.0);
  }
  SECTION("invalid tensors") {
    CHECK_THROWS(ProcessTensor({}));
    CHECK_THROWS_AS(ProcessTensor({ComplexOperator::identity({2}),
                                   ComplexOperator::identity({3})}),
                    qcore::DimensionError);
  }
}
