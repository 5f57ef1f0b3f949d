// Copyright (c) 2026 The svqe developers
// SPDX-License-Identifier: Apache-2.0

#ifndef SVQE_VQE_HPP
#define SVQE_VQE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "svqe/hamiltonian.hpp"
#include "svqe/noise.hpp"
#include "svqe/optimizer.hpp"
#include "svqe/positivity.hpp"
#include "svqe/symmetry.hpp"
#include "svqe/tomography.hpp"

namespace svqe {

/// Reconstruction path for sampled energies: the full shot-sampled
/// tomography chain, or the Gaussian coefficient-noise shortcut.
enum class Pipeline { SHOT_TOMOGRAPHY, GAUSSIAN_SHORTCUT };

std::string to_string(Pipeline p);
Pipeline pipeline_from_string(const std::string& s);

struct OptimizerConfig {
  int population = 10;
  double initial_theta = 1.5707963267948966;  // pi/2
  double initial_sigma = 0.5;
  int max_generations = 100;
  double tolerance = 1e-4;  // Hartree
  std::uint64_t seed = 0;
  std::int64_t n_meas_optimization = 1000;
  std::int64_t n_meas_final = 100000;
  Pipeline pipeline = Pipeline::SHOT_TOMOGRAPHY;
};

struct RunMetrics {
  double E_raw = 0.0;
  double E_sv = 0.0;
  double dE_raw = 0.0;
  double dE_sv = 0.0;
  double F_raw = 0.0;
  double F_sv = 0.0;
};

/// Converged VQE result at one bond distance. Metrics are recomputable from
/// the stored vectors.
struct RunResult {
  double bond_distance = 0.0;
  double converged_theta = 0.0;
  PauliVector raw_vector;
  PauliVector sv_vector;
  RunMetrics metrics;
  std::vector<std::pair<double, double>> trace;  // per-generation (theta, E)
  int generations = 0;
  bool hit_max_generations = false;
};

/// Per-qubit mean/std of the fluctuating device parameters.
struct ParameterFluctuation {
  double t1_mean_us = 0.0, t1_std_us = 0.0;
  double t2_star_mean_us = 0.0, t2_star_std_us = 0.0;
  double p_residual_mean = 0.0, p_residual_std = 0.0;
};

struct FluctuationSpec {
  ParameterFluctuation q0;
  ParameterFluctuation q1;
  int n_samples = 10000;
};

/// Pure-dephasing-time mean and variance implied by fluctuating T1 and T2*.
/// A negative derived variance is clamped to zero (flagged in `clamped`).
struct TphiStatistics {
  double mean_us = 0.0;
  double var_us2 = 0.0;
  bool clamped = false;
};
TphiStatistics derive_tphi_statistics(const ParameterFluctuation& p);

/// Simulates the circuit at theta, reconstructs through the chosen pipeline
/// and returns the variational energy together with the full coefficient
/// vector. n_meas == 0 selects exact (infinite-shot) reconstruction.
std::pair<double, PauliVector> evaluate_energy(double theta,
                                               const Hamiltonian& h,
                                               const NoiseModel& noise,
                                               std::int64_t n_meas,
                                               std::uint64_t seed,
                                               Pipeline pipeline);

/// Closed-loop optimization at one bond distance: evolutionary search on
/// the sampled energy, final high-precision tomography, symmetry
/// verification, and all derived metrics.
RunResult optimize(const Hamiltonian& h, const NoiseModel& noise,
                   const OptimizerConfig& cfg,
                   const SymmetrySpec& spec = SymmetrySpec::zz_odd());

/// Energy landscape E(theta, R) over the given grids (exact tomography
/// path). Row index follows theta_grid, column index follows h_list.
Eigen::MatrixXd landscape(const std::vector<Hamiltonian>& h_list,
                          const std::vector<double>& theta_grid,
                          const NoiseModel& noise);

struct EnsembleStatistics {
  double dE_raw_mean = 0.0, dE_raw_bar = 0.0;
  double dE_sv_mean = 0.0, dE_sv_bar = 0.0;
  double infid_raw_mean = 0.0, infid_raw_bar = 0.0;
  double infid_sv_mean = 0.0, infid_sv_bar = 0.0;
  bool tphi_var_clamped = false;
};

/// Monte Carlo over device-parameter fluctuations: T1 and Tphi are drawn
/// from independent normals (negative draws rejected), residual excitations
/// from truncated normals; each sample is simulated exactly at the given
/// theta. Error bars are twice the population standard deviation.
EnsembleStatistics fluctuation_ensemble(const FluctuationSpec& spec,
                                        const NoiseModel& base,
                                        const Hamiltonian& h, double theta,
                                        std::uint64_t seed,
                                        const SymmetrySpec& sym =
                                            SymmetrySpec::zz_odd());

struct BudgetRow {
  ErrorLevel level = ErrorLevel::IDEAL;
  double dE_raw = 0.0, dE_sv = 0.0;
  double infid_raw = 0.0, infid_sv = 0.0;
  // contribution of this level relative to the previous one
  double inc_dE_raw = 0.0, inc_dE_sv = 0.0;
  double inc_infid_raw = 0.0, inc_infid_sv = 0.0;
};

/// Evaluates the error metrics at each cumulative error level (exact
/// reconstruction) and reports per-level increments.
std::vector<BudgetRow> error_budget(const Hamiltonian& h,
                                    double theta_converged,
                                    const NoiseModel& noise_base,
                                    const std::vector<ErrorLevel>& levels,
                                    const SymmetrySpec& spec =
                                        SymmetrySpec::zz_odd());

struct EtaSample {
  int bin = 0;
  double eta_E = 0.0;
  double eta_F = 0.0;
};

/// Regenerates `bins` independent reduced-shot reconstructions of the
/// converged state and returns the relative-improvement scatter, with or
/// without the positivity projection.
std::vector<EtaSample> binned_positivity_experiment(
    const Hamiltonian& h, const ReferenceSolution& ref, double theta,
    const NoiseModel& noise, int bins, std::int64_t n_meas_bin,
    bool enforce_positivity, std::uint64_t seed,
    Pipeline pipeline = Pipeline::SHOT_TOMOGRAPHY,
    const SymmetrySpec& spec = SymmetrySpec::zz_odd());

}  // namespace svqe

#endif  // SVQE_VQE_HPP
