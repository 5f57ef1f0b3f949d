// Copyright (c) 2026 The svqe developers
// SPDX-License-Identifier: Apache-2.0

#ifndef SVQE_CLI_HPP
#define SVQE_CLI_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "svqe/noise.hpp"
#include "svqe/symmetry.hpp"
#include "svqe/vqe.hpp"

namespace svqe {

/// Everything a command needs, read from one JSON config file. Only
/// `hamiltonian_csv` and `noise` are required; the rest defaults.
struct ExperimentConfig {
  std::string hamiltonian_csv;
  NoiseModel noise;
  OptimizerConfig optimizer;
  SymmetrySpec symmetry = SymmetrySpec::zz_odd();
  std::optional<FluctuationSpec> fluctuation;
  std::uint64_t seed = 0;
  std::string output_dir = "out";
  int jobs = 1;

  /// Optional per-bond-distance exchange-gate durations; rows not listed
  /// keep noise.t_int_us.
  std::vector<std::pair<double, double>> t_int_by_r;  // (R, t_int_us)

  int landscape_theta_points = 101;

  int positivity_bins = 100;
  std::int64_t positivity_n_meas = 1000;

  double negativity_theta = 0.7853981633974483;  // pi/4
  std::vector<std::int64_t> negativity_n_meas_grid = {
      1000, 2000, 5000, 10000, 20000, 50000, 100000};
  int negativity_seeds = 100;
};

/// Parses and validates a config; throws SchemaError on malformed or
/// missing fields and when the referenced Hamiltonian file does not exist.
ExperimentConfig experiment_config_from_json_string(const std::string& text);
ExperimentConfig load_experiment_config(const std::string& path);
std::string to_json_string(const ExperimentConfig& cfg, int indent = -1);

/// Noise model for one bond distance, with any per-R gate duration applied.
NoiseModel noise_for_r(const ExperimentConfig& cfg, double bond_distance);

// Commands write their data files (plus a `config.json` echo) into
// cfg.output_dir and return 0. Runtime failures raise exceptions; the
// binary maps config errors to exit code 2 and runtime errors to 3.

/// landscape.csv: `theta,R_angstrom,energy`.
int cmd_landscape(const ExperimentConfig& cfg);

/// One RunResult JSON per bond distance plus aggregate.csv:
/// `R_angstrom,theta,E_raw,E_sv,dE_raw,dE_sv,F_raw,F_sv`.
int cmd_vqe(const ExperimentConfig& cfg);

/// budget.csv with per-level, per-R metrics and increments; when a
/// fluctuation spec is configured, fluctuation.csv with Monte Carlo error
/// bars at the full error model.
int cmd_error_budget(const ExperimentConfig& cfg);

/// eta_scatter.csv (`R_angstrom,bin,eta_E,eta_F,positivity`) and log-spaced
/// marginal histograms eta_E_hist.csv / eta_F_hist.csv.
int cmd_positivity(const ExperimentConfig& cfg);

/// negativity.csv: reconstruction minimum-eigenvalue statistics per shot
/// count for the theta = pi/4 state.
int cmd_negativity(const ExperimentConfig& cfg);

}  // namespace svqe

#endif  // SVQE_CLI_HPP
