// Copyright (c) 2026 The svqe developers
// SPDX-License-Identifier: Apache-2.0

#ifndef SVQE_OPTIMIZER_HPP
#define SVQE_OPTIMIZER_HPP

#include <cstdint>
#include <functional>
#include <vector>

namespace svqe {

/// Objective for scalar stochastic optimization. eval_index is unique per
/// evaluation and should be folded into any sampling seeds.
using ScalarObjective = std::function<double(double x, std::uint64_t eval_index)>;

struct ScalarOptimizerResult {
  double best_x = 0.0;      // optimizer's final answer (distribution mean)
  double best_f = 0.0;      // lowest sampled objective value
  double best_sample_x = 0.0;
  int generations = 0;
  bool converged = false;   // false when the generation cap was hit
  /// per-generation (best sampled x, best sampled f)
  std::vector<std::pair<double, double>> trace;
};

/// Derivative-free scalar minimizer interface, so the evolutionary strategy
/// can be swapped for simpler line searches.
class ScalarOptimizer {
 public:
  virtual ~ScalarOptimizer() = default;
  virtual ScalarOptimizerResult minimize(const ScalarObjective& f,
                                         std::uint64_t seed) const = 0;
};

/// Covariance matrix adaptation evolution strategy restricted to one
/// dimension, (mu/mu_w, lambda) selection with log-linear weights and
/// cumulative step-size adaptation. In 1-D the covariance degenerates to a
/// scalar but the standard update equations are kept.
class CmaEs1d final : public ScalarOptimizer {
 public:
  struct Config {
    int population = 10;         // lambda
    double initial_x = 0.0;
    double initial_sigma = 0.5;
    int max_generations = 100;
    double tolerance = 1e-4;     // best-value improvement threshold
    int patience = 5;            // consecutive stalled generations to stop
    // Stalls are only counted once the sampling width has contracted below
    // this gate; with noisy objectives a lucky early sample would otherwise
    // freeze the best value and stop the search mid-exploration.
    double stall_sigma_gate = 0.05;
    // Hard stop: step size below the resolution anyone could act on.
    double step_tolerance = 5e-3;
  };

  explicit CmaEs1d(Config cfg);

  ScalarOptimizerResult minimize(const ScalarObjective& f,
                                 std::uint64_t seed) const override;

 private:
  Config cfg_;
};

}  // namespace svqe

#endif  // SVQE_OPTIMIZER_HPP
