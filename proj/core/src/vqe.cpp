// Copyright (c) 2026 The svqe developers
// SPDX-License-Identifier: Apache-2.0

#include "svqe/vqe.hpp"

#include <cmath>
#include <numbers>

#include "svqe/errors.hpp"
#include "svqe/rng.hpp"
#include "svqe/simulator.hpp"

namespace svqe {

namespace {

double wrap_angle(double theta) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double t = std::fmod(theta, two_pi);
  if (t < 0.0) t += two_pi;
  return t;
}

RunMetrics compute_metrics(const PauliVector& raw, const PauliVector& sv,
                           const Hamiltonian& h, const ReferenceSolution& ref) {
  RunMetrics m;
  m.E_raw = energy(raw, h);
  m.E_sv = energy(sv, h);
  m.dE_raw = m.E_raw - ref.ground_energy;
  m.dE_sv = m.E_sv - ref.ground_energy;
  m.F_raw = fidelity(raw, ref);
  m.F_sv = fidelity(sv, ref);
  return m;
}

}  // namespace

std::string to_string(Pipeline p) {
  return p == Pipeline::SHOT_TOMOGRAPHY ? "SHOT_TOMOGRAPHY"
                                        : "GAUSSIAN_SHORTCUT";
}

Pipeline pipeline_from_string(const std::string& s) {
  if (s == "SHOT_TOMOGRAPHY") return Pipeline::SHOT_TOMOGRAPHY;
  if (s == "GAUSSIAN_SHORTCUT") return Pipeline::GAUSSIAN_SHORTCUT;
  throw SchemaError("unknown pipeline `" + s + "`");
}

TphiStatistics derive_tphi_statistics(const ParameterFluctuation& p) {
  TphiStatistics stats;
  const double t1 = p.t1_mean_us;
  const double t2 = p.t2_star_mean_us;
  const double rate = 1.0 / t2 - 0.5 / t1;
  if (rate <= 0.0)
    throw InvalidNoiseModel("derive_tphi_statistics: T2* exceeds 2*T1 limit");
  stats.mean_us = 1.0 / rate;

  const double var_t1 = p.t1_std_us * p.t1_std_us;
  const double var_t2 = p.t2_star_std_us * p.t2_star_std_us;
  const double tphi2_over_t22 = (stats.mean_us * stats.mean_us) / (t2 * t2);
  const double bracket = var_t2 - var_t1 * (t2 * t2) / (2.0 * t1 * t1);
  double var = tphi2_over_t22 * bracket;
  if (var < 0.0) {
    var = 0.0;
    stats.clamped = true;
  }
  stats.var_us2 = var;
  return stats;
}

std::pair<double, PauliVector> evaluate_energy(double theta,
                                               const Hamiltonian& h,
                                               const NoiseModel& noise,
                                               std::int64_t n_meas,
                                               std::uint64_t seed,
                                               Pipeline pipeline) {
  PauliVector vec;
  if (pipeline == Pipeline::SHOT_TOMOGRAPHY) {
    const DensityMatrix rho = prepare_ansatz(theta, noise);
    const MeasurementModel model =
        calibrate_betas(noise, n_meas, derive_seed(seed, 1));
    const auto records = measure_state(rho, model, n_meas, derive_seed(seed, 2));
    vec = linear_inversion(records, model);
  } else {
    vec = gaussian_coefficient_sampling(prepare_ansatz_vector(theta, noise),
                                        n_meas, derive_seed(seed, 3));
  }
  return {energy(vec, h), std::move(vec)};
}

RunResult optimize(const Hamiltonian& h, const NoiseModel& noise,
                   const OptimizerConfig& cfg, const SymmetrySpec& spec) {
  CmaEs1d::Config opt_cfg;
  opt_cfg.population = cfg.population;
  opt_cfg.initial_x = cfg.initial_theta;
  opt_cfg.initial_sigma = cfg.initial_sigma;
  opt_cfg.max_generations = cfg.max_generations;
  opt_cfg.tolerance = cfg.tolerance;
  const CmaEs1d optimizer(opt_cfg);

  const ScalarObjective objective = [&](double theta, std::uint64_t eval) {
    return evaluate_energy(wrap_angle(theta), h, noise,
                           cfg.n_meas_optimization,
                           derive_seed(cfg.seed, 0xE7A1ULL, eval),
                           cfg.pipeline)
        .first;
  };
  const ScalarOptimizerResult opt =
      optimizer.minimize(objective, derive_seed(cfg.seed, 0x0CA0ULL));

  RunResult run;
  run.bond_distance = h.bond_distance;
  run.converged_theta = wrap_angle(opt.best_x);
  run.generations = opt.generations;
  run.hit_max_generations = !opt.converged;
  run.trace.reserve(opt.trace.size());
  for (const auto& [x, e] : opt.trace)
    run.trace.emplace_back(wrap_angle(x), e);

  run.raw_vector =
      evaluate_energy(run.converged_theta, h, noise, cfg.n_meas_final,
                      derive_seed(cfg.seed, 0xF17A1ULL), cfg.pipeline)
          .second;
  run.sv_vector = symmetry_verify(run.raw_vector, spec);

  const ReferenceSolution ref = exact_solution(h);
  run.metrics = compute_metrics(run.raw_vector, run.sv_vector, h, ref);
  return run;
}

Eigen::MatrixXd landscape(const std::vector<Hamiltonian>& h_list,
                          const std::vector<double>& theta_grid,
                          const NoiseModel& noise) {
  if (h_list.empty() || theta_grid.empty())
    throw DimensionMismatch("landscape: empty grid");
  Eigen::MatrixXd grid(theta_grid.size(), h_list.size());
  for (std::size_t t = 0; t < theta_grid.size(); ++t) {
    const PauliVector state = prepare_ansatz_vector(theta_grid[t], noise);
    for (std::size_t r = 0; r < h_list.size(); ++r)
      grid(t, r) = energy(state, h_list[r]);
  }
  return grid;
}

EnsembleStatistics fluctuation_ensemble(const FluctuationSpec& spec,
                                        const NoiseModel& base,
                                        const Hamiltonian& h, double theta,
                                        std::uint64_t seed,
                                        const SymmetrySpec& sym) {
  if (spec.n_samples < 2)
    throw std::invalid_argument("fluctuation_ensemble: need >= 2 samples");

  const TphiStatistics tphi_q0 = derive_tphi_statistics(spec.q0);
  const TphiStatistics tphi_q1 = derive_tphi_statistics(spec.q1);
  const ReferenceSolution ref = exact_solution(h);

  const bool degenerate_spec =
      spec.q0.t1_std_us == 0.0 && spec.q1.t1_std_us == 0.0 &&
      tphi_q0.var_us2 == 0.0 && tphi_q1.var_us2 == 0.0 &&
      spec.q0.p_residual_std == 0.0 && spec.q1.p_residual_std == 0.0;

  Rng rng(derive_seed(seed, 0xF1DC7ULL));
  std::vector<double> de_raw, de_sv, infid_raw, infid_sv;
  const int n = degenerate_spec ? 1 : spec.n_samples;
  de_raw.reserve(n);
  de_sv.reserve(n);
  infid_raw.reserve(n);
  infid_sv.reserve(n);

  for (int i = 0; i < n; ++i) {
    NoiseModel sample = base;
    auto draw_qubit = [&](QubitNoiseParams& q, const ParameterFluctuation& p,
                          const TphiStatistics& tphi) {
      const double t1 = p.t1_std_us > 0.0
                            ? rng.positive_normal(p.t1_mean_us, p.t1_std_us)
                            : p.t1_mean_us;
      const double tphi_sample =
          tphi.var_us2 > 0.0
              ? rng.positive_normal(tphi.mean_us, std::sqrt(tphi.var_us2))
              : tphi.mean_us;
      double p_res = p.p_residual_mean;
      if (p.p_residual_std > 0.0) {
        p_res = rng.normal(p.p_residual_mean, p.p_residual_std);
        while (p_res < 0.0 || p_res >= 0.5)
          p_res = rng.normal(p.p_residual_mean, p.p_residual_std);
      }
      q.t1_us = t1;
      q.t2_star_us = 1.0 / (1.0 / tphi_sample + 0.5 / t1);
      q.p_residual = p_res;
    };
    draw_qubit(sample.q0, spec.q0, tphi_q0);
    draw_qubit(sample.q1, spec.q1, tphi_q1);

    const PauliVector raw = prepare_ansatz_vector(theta, sample);
    const PauliVector sv = symmetry_verify(raw, sym);
    de_raw.push_back(energy_error(raw, ref, h));
    de_sv.push_back(energy_error(sv, ref, h));
    infid_raw.push_back(1.0 - fidelity(raw, ref));
    infid_sv.push_back(1.0 - fidelity(sv, ref));
  }

  auto mean_of = [](const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
  };
  auto bar_of = [&](const std::vector<double>& v) {
    // 95% confidence bar: twice the population standard deviation
    const double m = mean_of(v);
    double s = 0.0;
    for (double x : v) s += (x - m) * (x - m);
    return 2.0 * std::sqrt(s / static_cast<double>(v.size()));
  };

  EnsembleStatistics stats;
  stats.dE_raw_mean = mean_of(de_raw);
  stats.dE_raw_bar = degenerate_spec ? 0.0 : bar_of(de_raw);
  stats.dE_sv_mean = mean_of(de_sv);
  stats.dE_sv_bar = degenerate_spec ? 0.0 : bar_of(de_sv);
  stats.infid_raw_mean = mean_of(infid_raw);
  stats.infid_raw_bar = degenerate_spec ? 0.0 : bar_of(infid_raw);
  stats.infid_sv_mean = mean_of(infid_sv);
  stats.infid_sv_bar = degenerate_spec ? 0.0 : bar_of(infid_sv);
  stats.tphi_var_clamped = tphi_q0.clamped || tphi_q1.clamped;
  return stats;
}

std::vector<BudgetRow> error_budget(const Hamiltonian& h,
                                    double theta_converged,
                                    const NoiseModel& noise_base,
                                    const std::vector<ErrorLevel>& levels,
                                    const SymmetrySpec& spec) {
  for (std::size_t i = 1; i < levels.size(); ++i)
    if (levels[i] <= levels[i - 1])
      throw std::invalid_argument("error_budget: levels must be increasing");

  const ReferenceSolution ref = exact_solution(h);
  std::vector<BudgetRow> rows;
  rows.reserve(levels.size());
  for (const ErrorLevel level : levels) {
    const PauliVector raw =
        prepare_ansatz_vector(theta_converged, noise_base.with_level(level));
    const PauliVector sv = symmetry_verify(raw, spec);
    BudgetRow row;
    row.level = level;
    row.dE_raw = energy_error(raw, ref, h);
    row.dE_sv = energy_error(sv, ref, h);
    row.infid_raw = 1.0 - fidelity(raw, ref);
    row.infid_sv = 1.0 - fidelity(sv, ref);
    if (rows.empty()) {
      row.inc_dE_raw = row.dE_raw;
      row.inc_dE_sv = row.dE_sv;
      row.inc_infid_raw = row.infid_raw;
      row.inc_infid_sv = row.infid_sv;
    } else {
      const BudgetRow& prev = rows.back();
      row.inc_dE_raw = row.dE_raw - prev.dE_raw;
      row.inc_dE_sv = row.dE_sv - prev.dE_sv;
      row.inc_infid_raw = row.infid_raw - prev.infid_raw;
      row.inc_infid_sv = row.infid_sv - prev.infid_sv;
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<EtaSample> binned_positivity_experiment(
    const Hamiltonian& h, const ReferenceSolution& ref, double theta,
    const NoiseModel& noise, int bins, std::int64_t n_meas_bin,
    bool enforce_positivity, std::uint64_t seed, Pipeline pipeline,
    const SymmetrySpec& spec) {
  if (bins < 2)
    throw std::invalid_argument("binned_positivity_experiment: bins < 2");

  std::vector<EtaSample> samples;
  samples.reserve(bins);
  for (int b = 0; b < bins; ++b) {
    const PauliVector vec =
        evaluate_energy(theta, h, noise, n_meas_bin,
                        derive_seed(seed, 0xB1A5ULL, b), pipeline)
            .second;
    const RelativeImprovement eta =
        relative_improvements(vec, h, ref, spec, enforce_positivity);
    samples.push_back({b, eta.eta_E, eta.eta_F});
  }
  return samples;
}

}  // namespace svqe
