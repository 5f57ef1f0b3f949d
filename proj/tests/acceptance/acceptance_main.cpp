// Copyright (c) 2026 The svqe developers
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end acceptance suite. Each criterion prints one pass/fail line;
// the process exit code is the number of failed criteria.

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdlib>
#include <cstdio>
#include <filesystem>
#include <map>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "support/oracles.hpp"
#include "svqe/cli.hpp"
#include "svqe/positivity.hpp"
#include "svqe/rng.hpp"
#include "svqe/serialize.hpp"
#include "svqe/simulator.hpp"
#include "svqe/symmetry.hpp"
#include "svqe/tomography.hpp"
#include "svqe/vqe.hpp"

using namespace svqe;
namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kMasterSeed = 20260808ULL;

NoiseModel device_noise(ErrorLevel level = ErrorLevel::GATE_DEPHASING) {
  NoiseModel m;
  m.q1 = {9.8, 9.0, 0.0134};
  m.q0 = {11.7, 17.3, 0.0025};
  m.t2_star_red_us = 0.995;
  m.t_int_us = 0.0005;
  m.level = level;
  return m;
}

std::vector<Hamiltonian> bundled_table() {
  return load_coefficients(std::string(SVQE_DATA_DIR) + "/h2_sto3g.csv");
}

int g_failures = 0;

void report(int criterion, const char* name, bool pass,
            const std::string& detail) {
  std::printf("[%s] criterion %2d: %s — %s\n", pass ? "PASS" : "FAIL",
              criterion, name, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

std::string fmt(const char* format, ...) {
  char buf[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof(buf), format, args);
  va_end(args);
  return buf;
}

// ---------------------------------------------------------------------------
// 1. noiseless pipeline matches exact diagonalization to 1e-9 Hartree
void criterion_1() {
  const auto table = bundled_table();
  const NoiseModel ideal = device_noise(ErrorLevel::IDEAL);
  double worst = 0.0;
  for (const auto& h : table) {
    const ReferenceSolution ref = exact_solution(h);
    const DensityMatrix rho = prepare_ansatz(ref.optimal_theta, ideal);
    const MeasurementModel model = calibrate_betas(ideal, 0, 1);
    const PauliVector vec =
        linear_inversion(measure_state(rho, model, 0, 1), model);
    worst = std::max(worst, std::abs(energy(vec, h) - ref.ground_energy));
  }
  report(1, "noiseless pipeline exactness", worst < 1e-9,
         fmt("max |E - E0| = %.3e over %zu rows (tol 1e-9)", worst,
             table.size()));
}

// ---------------------------------------------------------------------------
// 2. coefficient-space verification equals the projector formula; idempotent
void criterion_2() {
  const SymmetrySpec spec = SymmetrySpec::zz_odd();
  double worst_eq = 0.0, worst_idem = 0.0;
  int tested = 0;
  for (std::uint64_t seed = 1; tested < 10000; ++seed) {
    const Eigen::Matrix4cd rho = oracle::random_density_matrix(seed, 1 + seed % 4);
    const PauliVector raw = decompose(DensityMatrix{2, rho});
    if (1.0 - raw.at("ZZ") <= 0.02) continue;
    ++tested;
    const PauliVector via_matrix =
        decompose(projector_verify(DensityMatrix{2, rho}, spec));
    const PauliVector via_coeffs = symmetry_verify(raw, spec);
    worst_eq = std::max(
        worst_eq,
        (via_matrix.coeffs - via_coeffs.coeffs).cwiseAbs().maxCoeff());
    const PauliVector twice = symmetry_verify(via_coeffs, spec);
    worst_idem = std::max(
        worst_idem, (twice.coeffs - via_coeffs.coeffs).cwiseAbs().maxCoeff());
  }
  report(2, "verification equals the projector formula",
         worst_eq < 1e-12 && worst_idem < 1e-12,
         fmt("max route gap %.2e, max idempotence gap %.2e over %d states "
             "(tol 1e-12)",
             worst_eq, worst_idem, tested));
}

// ---------------------------------------------------------------------------
// 3. verification mitigation factors on converged states, full noise model
std::vector<RunResult> g_runs;  // converged runs shared by criteria 3, 4, 6

const std::vector<RunResult>& converged_runs() {
  if (g_runs.empty()) {
    const auto table = bundled_table();
    const NoiseModel noise = device_noise();
    for (std::size_t r = 0; r < table.size(); ++r) {
      OptimizerConfig cfg;
      cfg.seed = derive_seed(kMasterSeed, 0x01, r);
      cfg.n_meas_final = 100000;
      g_runs.push_back(optimize(table[r], noise, cfg));
    }
  }
  return g_runs;
}

void criterion_3() {
  const auto& runs = converged_runs();
  double sum_e = 0.0, sum_f = 0.0;
  for (const RunResult& run : runs) {
    sum_e += std::abs(run.metrics.dE_raw) / std::abs(run.metrics.dE_sv);
    sum_f += std::abs(1.0 - run.metrics.F_raw) /
             std::abs(1.0 - run.metrics.F_sv);
  }
  const double mean_e = sum_e / runs.size();
  const double mean_f = sum_f / runs.size();
  report(3, "verification mitigation factors",
         mean_e >= 5.0 && mean_f >= 4.0,
         fmt("mean |dE_raw|/|dE_sv| = %.2f (need >= 5), "
             "mean infidelity ratio = %.2f (need >= 4)",
             mean_e, mean_f));
}

// ---------------------------------------------------------------------------
// 4. budget increments: relaxation and residual excitation shrink >= 3x
//    under verification, optimizer inaccuracy unchanged within 1e-9
void criterion_4() {
  const auto& runs = converged_runs();
  const auto table = bundled_table();
  const std::vector<ErrorLevel> levels = {
      ErrorLevel::IDEAL, ErrorLevel::DEPHASING, ErrorLevel::RELAXATION,
      ErrorLevel::RESIDUAL, ErrorLevel::GATE_DEPHASING};
  bool pass = true;
  double worst_ideal = 0.0, worst_relax = 0.0, worst_resid = 0.0;
  for (std::size_t r = 0; r < table.size(); ++r) {
    const auto rows = error_budget(table[r], runs[r].converged_theta,
                                   device_noise(), levels);
    worst_ideal = std::max(worst_ideal,
                           std::abs(rows[0].inc_dE_raw - rows[0].inc_dE_sv));
    const double relax_ratio =
        std::abs(rows[2].inc_dE_sv) / std::abs(rows[2].inc_dE_raw);
    const double resid_ratio =
        std::abs(rows[3].inc_dE_sv) / std::abs(rows[3].inc_dE_raw);
    worst_relax = std::max(worst_relax, relax_ratio);
    worst_resid = std::max(worst_resid, resid_ratio);
  }
  pass = worst_ideal <= 1e-9 && worst_relax <= 1.0 / 3.0 &&
         worst_resid <= 1.0 / 3.0;
  report(4, "budget mitigation property", pass,
         fmt("ideal increment gap %.1e (tol 1e-9); verified/raw increment "
             "ratios: relaxation %.4f, residual %.4f (need <= 0.333)",
             worst_ideal, worst_relax, worst_resid));
}

// ---------------------------------------------------------------------------
// 5. spectral projection against the independent dual solver
void criterion_5() {
  double worst_obj = 0.0, worst_eig = 0.0, worst_trace = 0.0;
  svqe::Rng rng(41);
  for (int trial = 0; trial < 1000; ++trial) {
    PauliVector v = decompose(DensityMatrix{
        2, oracle::random_density_matrix(5000 + trial, 1 + trial % 3)});
    v = gaussian_coefficient_sampling(v, 300 + 50 * (trial % 7),
                                      derive_seed(kMasterSeed, 0x05, trial));
    const ProjectionReport report_out = project_physical(v);

    const Eigen::MatrixXcd dual =
        oracle::nearest_physical_dual(reconstruct(v).mat);
    const double oracle_dist =
        (oracle::pauli_coefficients(dual) - v.coeffs).norm();
    worst_obj = std::max(
        worst_obj, std::abs(report_out.l2_distance - oracle_dist));
    worst_eig = std::min(worst_eig, min_eigenvalue(report_out.output));
    worst_trace =
        std::max(worst_trace,
                 std::abs(reconstruct(report_out.output).mat.trace().real() -
                          1.0));
  }
  const bool pass =
      worst_obj < 1e-8 && worst_eig >= -1e-10 && worst_trace < 1e-12;
  report(5, "positivity projection optimality", pass,
         fmt("max objective gap %.2e (tol 1e-8), min eigenvalue %.2e "
             "(tol -1e-10), max trace error %.2e",
             worst_obj, worst_eig, worst_trace));
}

// ---------------------------------------------------------------------------
// 6. binned relative-improvement scatter: y = x correlation with positivity
//    enforced; fidelity median below energy median without
void criterion_6() {
  const auto& runs = converged_runs();
  const auto table = bundled_table();
  const NoiseModel noise = device_noise();
  std::vector<double> log_e, log_f, off_e, off_f;
  for (std::size_t r = 0; r < table.size(); ++r) {
    const ReferenceSolution ref = exact_solution(table[r]);
    for (int enforce = 0; enforce < 2; ++enforce) {
      const auto scatter = binned_positivity_experiment(
          table[r], ref, runs[r].converged_theta, noise, 100, 1000,
          enforce == 1,
          derive_seed(kMasterSeed, 0x06, r, 0xE0F0 + enforce));
      for (const auto& s : scatter) {
        if (enforce == 1) {
          if (std::isfinite(s.eta_E) && std::isfinite(s.eta_F) &&
              s.eta_E > 0.0 && s.eta_F > 0.0) {
            log_e.push_back(std::log(s.eta_E));
            log_f.push_back(std::log(s.eta_F));
          }
        } else {
          if (std::isfinite(s.eta_E)) off_e.push_back(s.eta_E);
          if (std::isfinite(s.eta_F)) off_f.push_back(s.eta_F);
        }
      }
    }
  }
  const double me = oracle::mean(log_e), mf = oracle::mean(log_f);
  double see = 0.0, sff = 0.0, sef = 0.0;
  for (std::size_t i = 0; i < log_e.size(); ++i) {
    see += (log_e[i] - me) * (log_e[i] - me);
    sff += (log_f[i] - mf) * (log_f[i] - mf);
    sef += (log_e[i] - me) * (log_f[i] - mf);
  }
  const double corr = sef / std::sqrt(see * sff);
  const double slope = sef / sff;

  std::sort(off_e.begin(), off_e.end());
  std::sort(off_f.begin(), off_f.end());
  const double median_e = off_e[off_e.size() / 2];
  const double median_f = off_f[off_f.size() / 2];

  const bool corr_ok = corr > 0.7 && slope >= 0.8 && slope <= 1.2;
  const bool median_ok = median_f < median_e;
  report(6, "binned positivity scatter", corr_ok && median_ok,
         fmt("enforced: corr %.3f (need > 0.7), slope %.3f (need in "
             "[0.8, 1.2]); off: median eta_F %.2f vs eta_E %.2f (need "
             "eta_F below)",
             corr, slope, median_f, median_e));
  if (corr_ok && !median_ok) {
    std::printf(
        "       note: with noiseless +-1 digitized readout, verification\n"
        "       pins <ZZ> exactly and averages paired coefficients, so the\n"
        "       fidelity functional is denoised more than the energy\n"
        "       functional (|h_ZI - h_IZ| ~ 0.8 Ha amplifies surviving\n"
        "       noise); the pre-projection fidelity ratio therefore stays\n"
        "       above the energy ratio for every seed tried. Reproducing\n"
        "       the expected ordering requires readout noise outside this\n"
        "       model.\n");
  }
}

// ---------------------------------------------------------------------------
// 7. minimum-eigenvalue trend of the theta = pi/4 reconstruction
void criterion_7() {
  const NoiseModel noise = device_noise();
  const DensityMatrix rho =
      prepare_ansatz(0.25 * std::numbers::pi, noise);

  auto sweep = [&](std::int64_t n, int seeds, double& mean,
                   double& frac_negative) {
    double sum = 0.0;
    int negative = 0;
    for (int s = 0; s < seeds; ++s) {
      const std::uint64_t seed = derive_seed(kMasterSeed, 0x07, n, s);
      const MeasurementModel model =
          calibrate_betas(noise, n, derive_seed(seed, 1));
      const auto records =
          measure_state(rho, model, n, derive_seed(seed, 2));
      const double lambda = min_eigenvalue(linear_inversion(records, model));
      sum += lambda;
      if (lambda < 0.0) ++negative;
    }
    mean = sum / seeds;
    frac_negative = static_cast<double>(negative) / seeds;
  };

  double mean_small = 0.0, frac_small = 0.0;
  double mean_large = 0.0, frac_large = 0.0;
  sweep(1000, 200, mean_small, frac_small);
  sweep(50000, 100, mean_large, frac_large);

  const bool pass = frac_small > 0.5 && mean_large >= -0.01;
  report(7, "reconstruction negativity trend", pass,
         fmt("n=1e3: negative in %.0f%% of seeds (need > 50%%), mean %.4f; "
             "n=5e4: mean %.5f (need >= -0.01)",
             100.0 * frac_small, mean_small, mean_large));
}

// ---------------------------------------------------------------------------
// 8. sampling-noise calibration for both reconstruction paths
void criterion_8() {
  // Gaussian shortcut: empirical variance within 5% of (1-rho^2)/n
  PauliVector state = PauliVector::maximally_mixed(2);
  state.at("ZZ") = -0.9;
  state.at("XX") = 0.55;
  state.at("ZI") = 0.35;
  const std::int64_t n = 1000;
  std::vector<double> xx, zi;
  for (int s = 0; s < 10000; ++s) {
    const PauliVector noisy = gaussian_coefficient_sampling(
        state, n, derive_seed(kMasterSeed, 0x08, s));
    xx.push_back(noisy.at("XX"));
    zi.push_back(noisy.at("ZI"));
  }
  const double err_xx =
      std::abs(oracle::variance(xx) / ((1.0 - 0.55 * 0.55) / n) - 1.0);
  const double err_zi =
      std::abs(oracle::variance(zi) / ((1.0 - 0.35 * 0.35) / n) - 1.0);

  // shot tomography: rms coefficient error scales as n^-1/2 over a decade
  const DensityMatrix rho = prepare_ansatz(2.9, device_noise());
  const PauliVector truth = decompose(rho);
  const MeasurementModel model = MeasurementModel::ideal();
  auto rms = [&](std::int64_t shots) {
    double total = 0.0;
    const int seeds = 200;
    for (int s = 0; s < seeds; ++s) {
      const PauliVector rec = linear_inversion(
          measure_state(rho, model, shots,
                        derive_seed(kMasterSeed, 0x18, shots, s)),
          model);
      total += (rec.coeffs - truth.coeffs).squaredNorm();
    }
    return std::sqrt(total / seeds);
  };
  const double ratio = rms(500) / rms(5000);
  const double scaling_err = std::abs(ratio / std::sqrt(10.0) - 1.0);

  const bool pass = err_xx < 0.05 && err_zi < 0.05 && scaling_err < 0.10;
  report(8, "sampling-noise calibration", pass,
         fmt("shortcut variance errors %.1f%%, %.1f%% (tol 5%%); shot rms "
             "ratio %.3f vs sqrt(10) (err %.1f%%, tol 10%%)",
             100 * err_xx, 100 * err_zi, ratio, 100 * scaling_err));
}

// ---------------------------------------------------------------------------
// 9. every generated channel is trace preserving and completely positive
void criterion_9() {
  double worst_tp = 0.0, worst_choi = 0.0;
  int checked = 0;
  for (int ti = 0; ti <= 12; ++ti) {
    const double theta = std::numbers::pi * ti / 12.0;
    for (int si = 0; si <= 10; ++si) {
      const double sigma = si / 10.0;
      const PTM gate = flux_averaged_ptm(theta, sigma);
      worst_tp = std::max(worst_tp, trace_preservation_error(gate));
      worst_choi = std::min(worst_choi, choi_min_eigenvalue(gate));
      ++checked;
    }
  }
  for (double p : {0.0, 0.05, 0.25, 0.5, 0.75, 1.0}) {
    for (const PTM& single :
         {amplitude_damping_channel(p), dephasing_channel(p)}) {
      for (int qubit : {0, 1}) {
        const PTM embedded = embed_on_qubit(single, qubit, 2);
        worst_tp = std::max(worst_tp, trace_preservation_error(embedded));
        worst_choi = std::min(worst_choi, choi_min_eigenvalue(embedded));
        ++checked;
      }
    }
  }
  const bool pass = worst_tp < 1e-12 && worst_choi > -1e-9;
  report(9, "channel validity suite", pass,
         fmt("%d channels: max TP error %.2e (tol 1e-12), min Choi "
             "eigenvalue %.2e (tol -1e-9)",
             checked, worst_tp, worst_choi));
}

// ---------------------------------------------------------------------------
// 10. byte-identical reruns of every command
std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::map<std::string, std::string> snapshot(const fs::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& entry : fs::directory_iterator(dir))
    files[entry.path().filename().string()] = slurp(entry.path());
  return files;
}

void criterion_10() {
  const fs::path root = fs::temp_directory_path() / "svqe_acceptance_det";
  fs::remove_all(root);
  fs::create_directories(root);

  const fs::path table = root / "table.csv";
  {
    std::ofstream out(table);
    out << "R_angstrom,h_II,h_ZI,h_IZ,h_XX,h_YY,h_ZZ\n"
           "0.75,-0.339,0.304,-0.485,0.091,0.091,-0.011\n"
           "1.20,-0.459,0.188,-0.426,0.122,0.122,0.011\n";
  }
  ExperimentConfig cfg;
  cfg.hamiltonian_csv = table.string();
  cfg.noise = device_noise();
  cfg.optimizer.population = 6;
  cfg.optimizer.max_generations = 12;
  cfg.optimizer.n_meas_optimization = 200;
  cfg.optimizer.n_meas_final = 2000;
  cfg.seed = 11;
  cfg.landscape_theta_points = 16;
  cfg.positivity_bins = 5;
  cfg.positivity_n_meas = 400;
  cfg.negativity_n_meas_grid = {400, 1500};
  cfg.negativity_seeds = 8;

  struct Command {
    const char* name;
    int (*run)(const ExperimentConfig&);
  };
  const Command commands[] = {{"landscape", cmd_landscape},
                              {"vqe", cmd_vqe},
                              {"error-budget", cmd_error_budget},
                              {"positivity", cmd_positivity},
                              {"negativity", cmd_negativity}};
  bool pass = true;
  std::string detail = "all five commands byte-identical on rerun";
  for (const Command& command : commands) {
    // identical config (including the output directory), run twice
    const fs::path out = root / command.name;
    cfg.output_dir = out.string();
    if (command.run(cfg) != 0) {
      pass = false;
      detail = std::string(command.name) + " returned nonzero";
      break;
    }
    const auto first = snapshot(out);
    if (command.run(cfg) != 0) {
      pass = false;
      detail = std::string(command.name) + " returned nonzero on rerun";
      break;
    }
    const auto second = snapshot(out);
    if (first.empty() || first != second) {
      pass = false;
      detail = std::string(command.name) + " outputs differ on rerun";
      break;
    }
  }
  report(10, "command determinism", pass, detail);
}

}  // namespace

int main(int argc, char** argv) {
  void (*criteria[10])() = {criterion_1, criterion_2, criterion_3,
                            criterion_4, criterion_5, criterion_6,
                            criterion_7, criterion_8, criterion_9,
                            criterion_10};
  if (argc > 1) {
    // run a single criterion (used by the ctest registrations)
    const int which = std::atoi(argv[1]);
    if (which < 1 || which > 10) {
      std::fprintf(stderr, "usage: %s [1-10]\n", argv[0]);
      return 64;
    }
    criteria[which - 1]();
    return g_failures;
  }
  std::printf("acceptance suite (seed %llu)\n",
              static_cast<unsigned long long>(kMasterSeed));
  for (auto criterion : criteria) criterion();
  std::printf("%d of 10 criteria passed\n", 10 - g_failures);
  return g_failures;
}
