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

#include "subtime/cli/experiments.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "subtime/photonclock/cascade.hpp"
#include "subtime/photonclock/causal_box.hpp"
#include "subtime/photonclock/echo.hpp"
#include "subtime/photonclock/ledger.hpp"
#include "subtime/photonclock/rcp.hpp"
#include "subtime/piflink/link.hpp"
#include "subtime/process/alternating.hpp"
#include "subtime/process/process_matrix.hpp"
#include "subtime/process/quantum_switch.hpp"
#include "subtime/qcore/linalg.hpp"
#include "subtime/qcore/random.hpp"

namespace subtime::cli {

namespace {

using qcore::Matrix;
using qcore::Rng;

Matrix named_gate(const std::string& name, Rng& rng) {
  if (name == "i") return qcore::gates::identity();
  if (name == "x") return qcore::gates::pauli_x();
  if (name == "y") return qcore::gates::pauli_y();
  if (name == "z") return qcore::gates::pauli_z();
  if (name == "h") return qcore::gates::hadamard();
  if (name == "random") return qcore::random_unitary(2, rng);
  throw InvalidParameter("unknown gate '" + name + "' (expected i, x, y, z, h or random)");
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidParameter(what);
}

double in_unit(const ParamTable& p, const std::string& name) {
  const double v = p.number(name);
  require(v >= 0.0 && v <= 1.0, "parameter '" + name + "' must lie in [0,1]");
  return v;
}

long long positive(const ParamTable& p, const std::string& name) {
  const long long v = p.integer(name);
  require(v > 0, "parameter '" + name + "' must be > 0");
  return v;
}

// ---------------------------------------------------------------------------

Report run_duality(const ParamTable& p, std::uint64_t seed) {
  const double omega = p.number("omega");
  require(omega > 0.0, "parameter 'omega' must be > 0");
  const auto points = static_cast<std::size_t>(positive(p, "points"));
  const double periods = p.number("periods");
  require(periods > 0.0, "parameter 'periods' must be > 0");
  const double perturbation = p.number("perturbation");
  require(perturbation >= 0.0, "parameter 'perturbation' must be >= 0");
  const std::string& mode_name = p.text("mode");
  require(mode_name == "continuous" || mode_name == "discrete",
          "parameter 'mode' must be continuous or discrete");
  const auto mode = mode_name == "continuous" ? process::Interpolation::Continuous
                                              : process::Interpolation::DiscreteSwap;

  Rng rng(seed);
  const auto channel = qcore::random_channel(2, 2, rng);
  const auto input = qcore::random_density({2}, rng);
  const auto w = process::from_channel_order(channel, process::Order::AB, input);
  const auto base = process::build_alternating_family(w, omega, mode);

  Matrix kick = Matrix::Zero(16, 16);
  if (perturbation > 0.0) {
    kick = qcore::Complex(0.0, 1.0) * qcore::random_hermitian(16, rng);
    kick *= perturbation / qcore::spectral_norm(kick);
  }
  const process::ProcessFamily fam(
      [&](double t) {
        auto pair = base.at(t);
        if (perturbation > 0.0) {
          pair.ba = process::ProcessMatrix(
              qcore::ComplexOperator(pair.ba.matrix() + kick, pair.ba.op().dims()));
        }
        return pair;
      },
      base.period());

  const auto ts = process::time_grid(fam.period(), periods, points);
  std::vector<double> deviation;
  for (double t : ts) deviation.push_back(process::check_duality(fam, std::span(&t, 1)).max_deviation);
  const auto report_all = process::check_duality(fam, ts);

  Report r;
  r.metrics["period"] = fam.period();
  r.metrics["max_deviation"] = report_all.max_deviation;
  r.metrics["worst_time"] = report_all.worst_time;
  r.metrics["holds"] = report_all.holds;
  r.metrics["forward_valid"] = process::validate_ocb(w).valid;
  r.series.add("t", ts);
  r.series.add("deviation", deviation);
  if (perturbation == 0.0 && !report_all.holds) {
    r.violations.push_back("duality deviation exceeds 1e-12 without perturbation");
  }
  return r;
}

Report run_switch(const ParamTable& p, std::uint64_t seed) {
  Rng rng(seed);
  const Matrix ua = named_gate(p.text("ua"), rng);
  const Matrix ub = named_gate(p.text("ub"), rng);
  const auto target_index = p.integer("target");
  require(target_index == 0 || target_index == 1, "parameter 'target' must be 0 or 1");
  const auto sw = process::build_quantum_switch(ua, ub);
  const auto target = qcore::DensityMatrix::basis(2, static_cast<std::size_t>(target_index));
  const auto control = qcore::DensityMatrix::pure(qcore::gates::plus());

  const double p_plus = sw.control_probability(target, control, qcore::gates::plus());
  const double p_minus = sw.control_probability(target, control, qcore::gates::minus());
  const auto validity = process::validate_ocb(sw.traced_process(target, control));
  const auto contracted = process::contract_local(
      sw.full_process(target, control), qcore::Channel::unitary(ua).choi().matrix(),
      qcore::Channel::unitary(ub).choi().matrix());
  const double contraction_error =
      qcore::spectral_norm(contracted.matrix() - sw.output(target, control).matrix());

  Report r;
  r.metrics["p_control_plus"] = p_plus;
  r.metrics["p_control_minus"] = p_minus;
  r.metrics["process_valid"] = validity.valid;
  r.metrics["normalization_deviation"] = validity.normalization_deviation;
  r.metrics["causal_deviation"] = validity.causal_deviation;
  r.metrics["min_eigenvalue"] = validity.min_eigenvalue;
  r.metrics["contraction_error"] = contraction_error;

  // Control statistics as the second unitary rotates away from the first.
  std::vector<double> theta, plus, minus;
  const int steps = 33;
  for (int k = 0; k < steps; ++k) {
    const double th = std::numbers::pi * k / (steps - 1);
    const Matrix rot = std::cos(th / 2) * qcore::gates::identity() -
                       qcore::Complex(0, 1) * std::sin(th / 2) * qcore::gates::pauli_y();
    const auto s = process::build_quantum_switch(ua, rot * ub);
    theta.push_back(th);
    plus.push_back(s.control_probability(target, control, qcore::gates::plus()));
    minus.push_back(s.control_probability(target, control, qcore::gates::minus()));
  }
  r.series.add("theta", theta);
  r.series.add("p_plus", plus);
  r.series.add("p_minus", minus);

  if (!validity.valid) r.violations.push_back("traced switch process failed validation");
  if (contraction_error > 1e-9) r.violations.push_back("process contraction disagrees with output");
  if (std::abs(p_plus + p_minus - 1.0) > 1e-9) r.violations.push_back("control probabilities do not sum to 1");
  return r;
}

Report run_ac_vs_ico(const ParamTable& p, std::uint64_t seed) {
  Rng rng(seed);
  const Matrix ua = named_gate(p.text("ua"), rng);
  const Matrix ub = named_gate(p.text("ub"), rng);
  const auto noises = p.numbers("noise");
  const auto labels = p.tokens("noise");
  for (double n : noises) require(n >= 0.0 && n <= 1.0, "noise levels must lie in [0,1]");
  const int steps = static_cast<int>(positive(p, "steps"));

  const auto reports = process::ac_vs_ico_sweep(ua, ub, noises, steps);
  Report r;
  std::vector<double> step_axis;
  for (int s = 0; s <= steps; ++s) step_axis.push_back(s);
  r.series.add("step", step_axis);
  for (std::size_t k = 0; k < reports.size(); ++k) {
    const auto& rep = reports[k];
    const std::string tag = labels[k];
    r.series.add("ac_" + tag, rep.ac_entropy);
    r.series.add("ico_" + tag, rep.ico_entropy);
    r.metrics["ac_final_" + tag] = rep.ac_final;
    r.metrics["ico_final_" + tag] = rep.ico_final;
    // Reported, not asserted: which order produces less entropy is open.
    r.metrics["ac_le_ico_" + tag] = rep.ac_final <= rep.ico_final + 1e-12;
    for (std::size_t s = 1; s < rep.ac_entropy.size(); ++s) {
      if (rep.ac_entropy[s] < rep.ac_entropy[s - 1] - 1e-10 ||
          rep.ico_entropy[s] < rep.ico_entropy[s - 1] - 1e-10) {
        r.violations.push_back("entropy decreased at noise " + tag + ", step " + std::to_string(s));
        break;
      }
    }
  }
  return r;
}

Report run_photonclock(const ParamTable& p, std::uint64_t seed) {
  photonclock::BoxConfig cfg;
  cfg.decoherence = in_unit(p, "decoherence");
  cfg.reflectivity_a = cfg.reflectivity_b = in_unit(p, "reflectivity");
  cfg.polarization = p.flag("polarization");
  cfg.seed = seed;
  const auto bounces = positive(p, "bounces");
  const auto samples = p.integer("break-samples");
  require(samples >= 0, "parameter 'break-samples' must be >= 0");
  const auto w = p.numbers("weights");
  require(w.size() == 4, "parameter 'weights' needs four entries");

  photonclock::CausalBox box(cfg);
  const auto initial = box.photon();
  std::vector<double> index, tc, bare, fid;
  double last_even_fidelity = 1.0;
  for (long long k = 1; k <= bounces; ++k) {
    box.bounce();
    const double f = qcore::fidelity(initial, box.photon());
    if (k % 2 == 0) last_even_fidelity = f;
    index.push_back(static_cast<double>(k));
    tc.push_back(photonclock::classical_time(box.ledger()));
    bare.push_back(photonclock::bare_classical_time(box.ledger()));
    fid.push_back(f);
  }

  Report r;
  r.metrics["bounces"] = bounces;
  r.metrics["decohered_count"] = box.ledger().decohered_count();
  r.metrics["escaped"] = box.escaped();
  r.metrics["classical_time"] = photonclock::classical_time(box.ledger());
  r.metrics["bare_classical_time"] = photonclock::bare_classical_time(box.ledger());
  r.metrics["even_bounce_fidelity"] = last_even_fidelity;
  const bool isolated = cfg.decoherence == 0.0 && cfg.reflectivity_a == 1.0;
  if (isolated) {
    const bool nd = photonclock::check_nondiscernability(photonclock::CausalBox(cfg),
                                                         static_cast<int>(bounces / 2));
    r.metrics["nondiscernable"] = nd;
    if (!nd) r.violations.push_back("isolated box failed to return to its initial state");
  }

  if (samples > 0) {
    photonclock::BoundaryConditions bc{{w[0], w[1], w[2], w[3]}};
    std::array<long long, 4> counts{};
    for (long long s = 0; s < samples; ++s) {
      ++counts[static_cast<std::size_t>(photonclock::break_symmetry(box, bc))];
    }
    for (std::size_t k = 0; k < 4; ++k) {
      r.metrics[std::string("break_") +
                std::string(photonclock::to_string(static_cast<photonclock::BreakOutcome>(k)))] =
          counts[k];
    }
    r.metrics["classical_time_after_break"] = photonclock::classical_time(box.ledger());
  }
  r.series.add("bounce", index);
  r.series.add("classical_time", tc);
  r.series.add("bare_classical_time", bare);
  r.series.add("fidelity_to_initial", fid);
  for (std::size_t k = 1; k < tc.size(); ++k) {
    if (tc[k] < tc[k - 1]) {
      r.violations.push_back("classical time decreased");
      break;
    }
  }
  return r;
}

Report run_cascade(const ParamTable& p, std::uint64_t) {
  const auto n_min = p.integer("n-min"), n_max = p.integer("n-max");
  require(n_min >= 2 && n_max <= photonclock::kMaxCascadeSites && n_min <= n_max,
          "cascade sizes must satisfy 2 <= n-min <= n-max <= 12");
  const double noise = in_unit(p, "noise");
  const int horizon = static_cast<int>(positive(p, "horizon"));
  std::vector<photonclock::CascadeConfig> cfgs;
  for (long long n = n_min; n <= n_max; ++n) {
    cfgs.push_back({.n = static_cast<int>(n), .noise = noise, .horizon = horizon});
  }
  const auto reports = photonclock::cascade_sweep(cfgs);

  Report r;
  std::vector<double> ns, best, step;
  bool monotone = true;
  for (std::size_t k = 0; k < reports.size(); ++k) {
    ns.push_back(reports[k].n);
    best.push_back(reports[k].best_fidelity);
    step.push_back(reports[k].best_step);
    if (k > 0 && best[k] > best[k - 1] + 1e-12) monotone = false;
    r.metrics["best_fidelity_n" + std::to_string(reports[k].n)] = reports[k].best_fidelity;
  }
  r.metrics["horizon"] = horizon;
  r.metrics["monotone_non_increasing"] = monotone;
  r.series.add("n", ns);
  r.series.add("best_fidelity", best);
  r.series.add("best_step", step);
  return r;
}

Report run_wfecho(const ParamTable& p, std::uint64_t) {
  const double alpha = in_unit(p, "alpha");
  const double bits = p.number("bits");
  require(bits >= 0.0, "parameter 'bits' must be >= 0");
  const auto points = positive(p, "points");
  require(points >= 2, "parameter 'points' must be >= 2");

  const auto e = photonclock::wf_echo(alpha, bits);
  Report r;
  r.metrics["i_transmitted"] = bits;
  r.metrics["i_reflected"] = e.i_reflected;
  r.metrics["delta_s"] = e.delta_s;
  std::vector<double> a, refl, ds;
  bool balanced = e.i_reflected + e.delta_s == bits;
  for (long long k = 0; k < points; ++k) {
    const double ak = static_cast<double>(k) / static_cast<double>(points - 1);
    const auto ek = photonclock::wf_echo(ak, bits);
    a.push_back(ak);
    refl.push_back(ek.i_reflected);
    ds.push_back(ek.delta_s);
    balanced = balanced && ek.i_reflected + ek.delta_s == bits;
  }
  r.metrics["balanced"] = balanced;
  r.series.add("alpha", a);
  r.series.add("i_reflected", refl);
  r.series.add("delta_s", ds);
  if (!balanced) r.violations.push_back("reflected plus entropy differs from transmitted");
  return r;
}

piflink::LinkConfig link_config(const ParamTable& p, std::uint64_t seed) {
  piflink::LinkConfig cfg;
  cfg.slice_count = static_cast<std::uint64_t>(positive(p, "slices"));
  cfg.bit_flip_forward = in_unit(p, "flip");
  cfg.bit_flip_backward = in_unit(p, "flip-back");
  cfg.echo_loss = in_unit(p, "echo-loss");
  cfg.temperature_kelvin = p.number("temperature");
  require(cfg.temperature_kelvin > 0.0, "parameter 'temperature' must be > 0");
  cfg.seed = seed;
  return cfg;
}

void add_ledger_metrics(Report& r, const piflink::InfoLedger& l) {
  r.metrics["i_plus"] = l.i_plus;
  r.metrics["i_minus"] = l.i_minus;
  r.metrics["i_transmitted"] = l.i_transmitted;
  r.metrics["i_reflected"] = l.i_reflected;
  r.metrics["h_in"] = l.h_in;
  r.metrics["h_out"] = l.h_out;
  r.metrics["delta_s"] = l.delta_s;
  r.metrics["landauer_joules"] = l.landauer_joules;
}

Report run_pif(const ParamTable& p, std::uint64_t seed) {
  auto cfg = link_config(p, seed);
  const auto mode = piflink::parse_link_mode(p.text("mode"));
  require(mode.has_value(), "parameter 'mode' must be pif or fito");
  cfg.mode = *mode;
  const long long stride_param = p.integer("stride");
  require(stride_param >= 0, "parameter 'stride' must be >= 0");

  const auto run = piflink::run_link(cfg);
  const double conservation = piflink::conservation_check(run.series);
  Report r;
  add_ledger_metrics(r, run.ledger);
  r.metrics["conservation_check"] = conservation;
  r.metrics["forward_rate"] = run.forward_rate;
  r.metrics["reflected_rate"] = run.reflected_rate;
  r.metrics["injected"] = run.injected;
  r.metrics["detected"] = run.detected;
  r.metrics["undetected"] = run.undetected;
  r.metrics["echoes_lost"] = run.echoes_lost;
  r.metrics["buffer_drops"] = run.buffer_drops;
  r.metrics["throughput"] = run.throughput;
  r.metrics["symmetry_deviation"] = run.symmetry_deviation;
  r.metrics["symmetry_tolerance"] = run.symmetry_tolerance;

  const std::size_t n = run.series.size();
  const std::size_t stride =
      stride_param > 0 ? static_cast<std::size_t>(stride_param) : std::max<std::size_t>(1, n / 1000);
  const auto profile = piflink::conservation_profile(run.series);
  std::vector<double> cycle, ip, im, ds, lj, viol;
  for (std::size_t k = 0; k < n; k += stride) {
    cycle.push_back(static_cast<double>(k));
    ip.push_back(run.series[k].i_plus);
    im.push_back(run.series[k].i_minus);
    ds.push_back(run.series[k].delta_s);
    lj.push_back(run.series[k].landauer_joules);
    viol.push_back(k == 0 ? 0.0 : profile[k - 1]);
    if (k + stride >= n && k + 1 != n) k = n - 1 - stride;  // always include the last cycle
  }
  r.series.add("cycle", cycle);
  r.series.add("i_plus", ip);
  r.series.add("i_minus", im);
  r.series.add("delta_s", ds);
  r.series.add("landauer_joules", lj);
  r.series.add("cycle_violation", viol);

  for (const auto& l : run.series) {
    if (l.delta_s < 0.0) {
      r.violations.push_back("negative entropy production");
      break;
    }
  }
  const bool clean = cfg.bit_flip_forward == 0.0 && cfg.bit_flip_backward == 0.0;
  if (cfg.mode == piflink::LinkMode::PIF && clean && cfg.echo_loss == 0.0) {
    if (run.ledger.delta_s != 0.0) r.violations.push_back("perfect link produced entropy");
    if (conservation != 0.0) r.violations.push_back("perfect link violated conservation");
    if (run.ledger.landauer_joules != 0.0) r.violations.push_back("perfect link erased bits");
    if (run.symmetry_deviation > run.symmetry_tolerance) {
      r.violations.push_back("perfect link joint is asymmetric beyond sampling tolerance");
    }
  }
  if (cfg.mode == piflink::LinkMode::PIF && cfg.bit_flip_backward == 0.0 && cfg.echo_loss == 0.0 &&
      (run.detected != run.injected || run.undetected != 0)) {
    r.violations.push_back("PIF missed a forward corruption");
  }
  return r;
}

Report run_fito_vs_pif(const ParamTable& p, std::uint64_t seed) {
  auto base = link_config(p, seed);
  const auto seeds = positive(p, "seeds");
  std::vector<double> seed_axis(static_cast<std::size_t>(seeds)), injected(seed_axis.size()),
      pif_detected(seed_axis.size()), pif_undetected(seed_axis.size()),
      fito_undetected(seed_axis.size());
  const auto count = static_cast<std::ptrdiff_t>(seeds);
  std::vector<std::string> errors(seed_axis.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      auto cfg = base;
      cfg.seed = seed + k;
      cfg.mode = piflink::LinkMode::PIF;
      const auto pif = piflink::run_link(cfg);
      cfg.mode = piflink::LinkMode::FITO;
      const auto fito = piflink::run_link(cfg);
      seed_axis[k] = static_cast<double>(cfg.seed);
      injected[k] = static_cast<double>(pif.injected);
      pif_detected[k] = static_cast<double>(pif.detected);
      pif_undetected[k] = static_cast<double>(pif.undetected);
      fito_undetected[k] = static_cast<double>(fito.undetected);
    } catch (const std::exception& e) {
      errors[k] = e.what();
    }
  }
  for (const auto& e : errors) {
    if (!e.empty()) throw std::runtime_error(e);
  }

  Report r;
  long long exact = 0, fito_positive = 0;
  double pif_missed = 0.0, fito_missed = 0.0;
  for (std::size_t k = 0; k < seed_axis.size(); ++k) {
    exact += pif_detected[k] == injected[k] && pif_undetected[k] == 0.0 ? 1 : 0;
    fito_positive += fito_undetected[k] > 0.0 ? 1 : 0;
    pif_missed += pif_undetected[k];
    fito_missed += fito_undetected[k];
  }
  r.metrics["seeds"] = seeds;
  r.metrics["pif_exact_detection_runs"] = exact;
  r.metrics["pif_undetected_total"] = pif_missed;
  r.metrics["fito_runs_with_undetected"] = fito_positive;
  r.metrics["fito_undetected_total"] = fito_missed;
  r.series.add("seed", seed_axis);
  r.series.add("injected", injected);
  r.series.add("pif_detected", pif_detected);
  r.series.add("pif_undetected", pif_undetected);
  r.series.add("fito_undetected", fito_undetected);
  if (base.bit_flip_backward == 0.0 && base.echo_loss == 0.0 && exact != seeds) {
    r.violations.push_back("PIF detection was not exact on every seed");
  }
  return r;
}

Report run_capacity(const ParamTable& p, std::uint64_t seed) {
  auto cfg = link_config(p, seed);
  const auto mc_bits = static_cast<std::uint64_t>(positive(p, "mc-bits"));
  const auto points = positive(p, "points");
  require(points >= 2, "parameter 'points' must be >= 2");

  const auto c = piflink::capacity(cfg, mc_bits);
  Report r;
  r.metrics["c_one_way"] = c.c_one_way;
  r.metrics["c_pif"] = c.c_pif;
  r.metrics["ratio"] = c.ratio;
  r.metrics["mc_one_way"] = c.mc_one_way;
  r.metrics["mc_pif"] = c.mc_pif;
  r.metrics["mc_ratio"] = c.mc_ratio;

  std::vector<double> flip, one_way, pif;
  for (long long k = 0; k < points; ++k) {
    auto sweep = cfg;
    sweep.bit_flip_forward = sweep.bit_flip_backward =
        0.5 * static_cast<double>(k) / static_cast<double>(points - 1);
    const auto ck = piflink::capacity(sweep, 1);
    flip.push_back(sweep.bit_flip_forward);
    one_way.push_back(ck.c_one_way);
    pif.push_back(ck.c_pif);
  }
  r.series.add("flip", flip);
  r.series.add("c_one_way", one_way);
  r.series.add("c_pif", pif);
  const bool symmetric = cfg.bit_flip_forward == cfg.bit_flip_backward && cfg.echo_loss == 0.0;
  if (symmetric && c.c_one_way > 0.0 && std::abs(c.ratio - 2.0) > 1e-12) {
    r.violations.push_back("symmetric link capacity ratio differs from 2");
  }
  return r;
}

Report run_rcp(const ParamTable& p, std::uint64_t seed) {
  const auto eps = p.numbers("epsilon");
  const auto labels = p.tokens("epsilon");
  for (double e : eps) require(e >= 0.0, "epsilon values must be >= 0");
  const double t_max = p.number("t-max");
  require(t_max > 0.0, "parameter 't-max' must be > 0");
  const auto points = positive(p, "points");
  require(points >= 2, "parameter 'points' must be >= 2");
  const auto dim = positive(p, "dim");
  require(dim >= 2 && dim <= 64, "parameter 'dim' must lie in [2, 64]");
  const bool mismatched = p.flag("mismatched");

  Rng rng(seed);
  const auto d = static_cast<std::size_t>(dim);
  const qcore::ComplexOperator h_plus(qcore::random_hermitian(d, rng));
  const qcore::ComplexOperator h_minus =
      mismatched ? qcore::ComplexOperator(qcore::random_hermitian(d, rng)) : h_plus;
  const qcore::Vector psi = qcore::ginibre(d, 1, rng).col(0).normalized();

  std::vector<double> ts;
  for (long long k = 0; k < points; ++k) {
    ts.push_back(t_max * static_cast<double>(k) / static_cast<double>(points - 1));
  }
  Report r;
  r.series.add("t", ts);
  std::vector<photonclock::InvariantReport> reps;
  for (std::size_t k = 0; k < eps.size(); ++k) {
    const photonclock::RcpOperator op(h_plus, h_minus, eps[k]);
    auto rep = photonclock::rcp_invariant(op, psi, ts);
    const std::string tag = labels[k];
    r.metrics["spread_" + tag] = rep.spread;
    r.metrics["max_drift_" + tag] = rep.max_drift;
    r.metrics["constant_" + tag] = rep.constant;
    r.metrics["duality_residual_" + tag] = photonclock::duality_residual(op, ts);
    r.series.add("invariant_" + tag, rep.values);
    if (eps[k] == 0.0 && !mismatched && !rep.constant) {
      r.violations.push_back("undamped dual RCP invariant is not constant");
    }
    reps.push_back(std::move(rep));
  }
  // Pointwise drift ordering on (0, 5] across increasing epsilon.
  std::vector<std::size_t> order(eps.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return eps[a] < eps[b]; });
  bool ordered = true;
  for (std::size_t j = 1; j < order.size(); ++j) {
    if (eps[order[j]] == eps[order[j - 1]]) continue;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      if (ts[i] <= 0.0 || ts[i] > 5.0) continue;
      if (!(reps[order[j]].drift[i] > reps[order[j - 1]].drift[i])) ordered = false;
    }
  }
  r.metrics["drift_ordered"] = ordered;
  return r;
}

std::vector<Experiment> build_registry() {
  const std::vector<ParamSpec> link_params = {
      {"slices", "10000", "slices per run"},
      {"flip", "0", "forward bit-flip probability"},
      {"flip-back", "0", "backward bit-flip probability"},
      {"echo-loss", "0", "echo loss probability"},
      {"temperature", "300", "temperature in kelvin for Landauer costs"},
  };
  auto with = [](std::vector<ParamSpec> base, std::vector<ParamSpec> extra) {
    base.insert(base.end(), extra.begin(), extra.end());
    return base;
  };
  return {
      {"duality", "time-reversal duality of alternating process families",
       {{"omega", "1.0", "angular frequency of the alternation"},
        {"points", "64", "time samples"},
        {"periods", "2", "periods spanned by the grid"},
        {"mode", "continuous", "continuous or discrete alternation"},
        {"perturbation", "0", "norm of a skew-Hermitian kick added to W_BA"}},
       run_duality},
      {"switch", "quantum switch and causal-order discrimination",
       {{"ua", "x", "Alice's unitary: i, x, y, z, h or random"},
        {"ub", "z", "Bob's unitary: i, x, y, z, h or random"},
        {"target", "0", "target basis state"}},
       run_switch},
      {"ac-vs-ico", "entropy of alternating versus indefinite causal order",
       {{"ua", "random", "first unitary"},
        {"ub", "random", "second unitary"},
        {"noise", "0,0.01,0.05,0.1", "depolarizing noise levels"},
        {"steps", "20", "steps per run"}},
       run_ac_vs_ico},
      {"photonclock", "photon clock, subtime ledger and symmetry breaking",
       {{"bounces", "1000", "mirror bounces"},
        {"decoherence", "0", "per-bounce decoherence"},
        {"reflectivity", "1", "mirror reflectivity"},
        {"polarization", "true", "carry a polarization qubit"},
        {"break-samples", "0", "symmetry-breaking samples after the bounces"},
        {"weights", "0.25,0.25,0.25,0.25", "outcome weights for symmetry breaking"}},
       run_photonclock},
      {"cascade", "decoherence cascade and recurrence",
       {{"n-min", "2", "smallest chain"},
        {"n-max", "6", "largest chain"},
        {"noise", "0", "depolarizing noise per step"},
        {"horizon", "64", "maximum exchange steps"}},
       run_cascade},
      {"wfecho", "absorber echo and unreflected entropy",
       {{"alpha", "0.5", "absorbed fraction that returns"},
        {"bits", "8", "transmitted information in bits"},
        {"points", "11", "alpha samples for the sweep"}},
       run_wfecho},
      {"pif", "perfect information feedback link and conservation law",
       with(link_params,
            {{"mode", "pif", "pif or fito"},
             {"stride", "0", "series subsampling stride, 0 for automatic"}}),
       run_pif},
      {"fito-vs-pif", "error visibility of echoed versus one-way links",
       with({{"slices", "1000", "slices per run"},
             {"flip", "0.01", "forward bit-flip probability"},
             {"flip-back", "0", "backward bit-flip probability"},
             {"echo-loss", "0", "echo loss probability"},
             {"temperature", "300", "temperature in kelvin"}},
            {{"seeds", "100", "paired runs, seeds seed..seed+n-1"}}),
       run_fito_vs_pif},
      {"capacity", "capacity of one-way versus bidirectional links",
       with({{"slices", "1", "unused by the analytic computation"},
             {"flip", "0.11", "forward bit-flip probability"},
             {"flip-back", "0.11", "backward bit-flip probability"},
             {"echo-loss", "0", "echo loss probability"},
             {"temperature", "300", "temperature in kelvin"}},
            {{"mc-bits", "100000", "Monte Carlo bits per direction"},
             {"points", "26", "flip samples for the sweep"}}),
       run_capacity},
      {"rcp", "reflective causal operator and its invariant",
       {{"epsilon", "0,0.01,0.02", "damping strengths"},
        {"t-max", "10", "end of the time grid"},
        {"points", "101", "time samples"},
        {"dim", "2", "Hilbert-space dimension"},
        {"mismatched", "false", "use independent forward and reverse generators"}},
       run_rcp},
  };
}

}  // namespace

const std::vector<Experiment>& registry() {
  static const std::vector<Experiment> all = build_registry();
  return all;
}

const Experiment& find_experiment(std::string_view name) {
  for (const auto& e : registry()) {
    if (e.name == name) return e;
  }
  throw UnknownExperiment("unknown experiment '" + std::string(name) + "'");
}

std::string list_experiments() {
  std::ostringstream out;
  std::size_t width = 0;
  for (const auto& e : registry()) width = std::max(width, e.name.size());
  for (const auto& e : registry()) {
    out << e.name << std::string(width - e.name.size() + 2, ' ') << e.topic << '\n';
  }
  return out.str();
}

}  // namespace subtime::cli
