// Copyright (c) 2026 The svqe developers
// SPDX-License-Identifier: Apache-2.0

#include "svqe/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "svqe/rng.hpp"

namespace svqe {

CmaEs1d::CmaEs1d(Config cfg) : cfg_(cfg) {
  if (cfg_.population < 4)
    throw std::invalid_argument("CmaEs1d: population must be >= 4");
  if (cfg_.tolerance <= 0.0)
    throw std::invalid_argument("CmaEs1d: tolerance must be positive");
  if (cfg_.initial_sigma <= 0.0)
    throw std::invalid_argument("CmaEs1d: initial sigma must be positive");
}

ScalarOptimizerResult CmaEs1d::minimize(const ScalarObjective& f,
                                        std::uint64_t seed) const {
  const int lambda = cfg_.population;
  const int mu = lambda / 2;

  // log-linear recombination weights
  std::vector<double> weights(mu);
  for (int i = 0; i < mu; ++i)
    weights[i] = std::log(mu + 0.5) - std::log(i + 1.0);
  const double wsum = std::accumulate(weights.begin(), weights.end(), 0.0);
  for (double& w : weights) w /= wsum;
  const double mu_eff =
      1.0 / std::inner_product(weights.begin(), weights.end(),
                               weights.begin(), 0.0);

  constexpr double n = 1.0;  // dimension
  const double c_sigma = (mu_eff + 2.0) / (n + mu_eff + 5.0);
  const double d_sigma =
      1.0 + 2.0 * std::max(0.0, std::sqrt((mu_eff - 1.0) / (n + 1.0)) - 1.0) +
      c_sigma;
  const double c_c = (4.0 + mu_eff / n) / (n + 4.0 + 2.0 * mu_eff / n);
  const double c_1 = 2.0 / ((n + 1.3) * (n + 1.3) + mu_eff);
  const double c_mu =
      std::min(1.0 - c_1, 2.0 * (mu_eff - 2.0 + 1.0 / mu_eff) /
                              ((n + 2.0) * (n + 2.0) + mu_eff));
  const double chi_n = std::sqrt(2.0 / std::numbers::pi);  // E|N(0,1)|

  double mean = cfg_.initial_x;
  double sigma = cfg_.initial_sigma;
  double cov = 1.0;      // scalar covariance
  double p_sigma = 0.0;  // step-size path
  double p_c = 0.0;      // covariance path

  Rng rng(derive_seed(seed, 0xC3AE5ULL));
  ScalarOptimizerResult result;
  result.best_f = std::numeric_limits<double>::infinity();

  std::vector<std::pair<double, double>> scored(lambda);  // (f, x)
  std::uint64_t eval_index = 0;
  int stalled = 0;
  double previous_best = std::numeric_limits<double>::infinity();

  for (int gen = 0; gen < cfg_.max_generations; ++gen) {
    std::vector<double> z(lambda);
    for (int i = 0; i < lambda; ++i) {
      z[i] = rng.normal();
      const double x = mean + sigma * std::sqrt(cov) * z[i];
      scored[i] = {f(x, eval_index++), x};
    }
    std::vector<int> order(lambda);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return scored[a].first < scored[b].first;
    });

    const double gen_best_f = scored[order[0]].first;
    const double gen_best_x = scored[order[0]].second;
    result.trace.emplace_back(gen_best_x, gen_best_f);
    if (gen_best_f < result.best_f) {
      result.best_f = gen_best_f;
      result.best_sample_x = gen_best_x;
    }

    // recombination
    double mean_new = 0.0;
    double z_weighted = 0.0;
    for (int i = 0; i < mu; ++i) {
      mean_new += weights[i] * scored[order[i]].second;
      z_weighted += weights[i] * z[order[i]];
    }

    // step-size path and sigma update
    p_sigma = (1.0 - c_sigma) * p_sigma +
              std::sqrt(c_sigma * (2.0 - c_sigma) * mu_eff) * z_weighted;
    sigma *= std::exp((c_sigma / d_sigma) * (std::abs(p_sigma) / chi_n - 1.0));

    // covariance path and rank-1/rank-mu update (scalars in 1-D)
    const double h_sigma =
        std::abs(p_sigma) /
                    std::sqrt(1.0 - std::pow(1.0 - c_sigma, 2.0 * (gen + 1))) <
                (1.4 + 2.0 / (n + 1.0)) * chi_n
            ? 1.0
            : 0.0;
    const double y = (mean_new - mean) / sigma;  // = sqrt(cov) * z_weighted
    p_c = (1.0 - c_c) * p_c +
          h_sigma * std::sqrt(c_c * (2.0 - c_c) * mu_eff) * y;
    double rank_mu = 0.0;
    for (int i = 0; i < mu; ++i) {
      const double yi = std::sqrt(cov) * z[order[i]];
      rank_mu += weights[i] * yi * yi;
    }
    cov = (1.0 - c_1 - c_mu) * cov +
          c_1 * (p_c * p_c + (1.0 - h_sigma) * c_c * (2.0 - c_c) * cov) +
          c_mu * rank_mu;
    mean = mean_new;

    result.generations = gen + 1;

    const double step = sigma * std::sqrt(cov);
    if (step < cfg_.step_tolerance) {
      result.converged = true;
      break;
    }
    // convergence: best-value improvement below tolerance for `patience`
    // consecutive generations, counted only once the search has contracted
    if (previous_best - result.best_f < cfg_.tolerance &&
        step < cfg_.stall_sigma_gate)
      ++stalled;
    else
      stalled = 0;
    previous_best = result.best_f;
    if (stalled >= cfg_.patience) {
      result.converged = true;
      break;
    }
  }

  result.best_x = mean;
  return result;
}

}  // namespace svqe
