// Copyright (c) 2026 The svqe developers
// SPDX-License-Identifier: Apache-2.0

#include "svqe/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "doctest.h"

using namespace svqe;

TEST_CASE("gauss_hermite: weights sum to sqrt(pi), nodes symmetric") {
  for (int n : {1, 2, 5, 15, 31}) {
    const GaussHermiteRule rule = gauss_hermite(n);
    double wsum = 0.0;
    for (double w : rule.weights) wsum += w;
    CHECK(wsum == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-13));
    for (int k = 0; k < n; ++k)
      CHECK(rule.nodes[k] ==
            doctest::Approx(-rule.nodes[n - 1 - k]).epsilon(1e-12));
  }
}

TEST_CASE("gauss_hermite integrates monomials exactly") {
  const GaussHermiteRule rule = gauss_hermite(15);
  // int exp(-x^2) x^{2m} dx = sqrt(pi) * (2m-1)!! / 2^m
  double expected = std::sqrt(std::numbers::pi);
  for (int m = 0; m <= 14; ++m) {
    if (m > 0) expected *= (2.0 * m - 1.0) / 2.0;
    double sum = 0.0;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k)
      sum += rule.weights[k] * std::pow(rule.nodes[k], 2 * m);
    CHECK(sum == doctest::Approx(expected).epsilon(1e-10));
    double odd = 0.0, magnitude = 0.0;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      const double term = rule.weights[k] * std::pow(rule.nodes[k], 2 * m + 1);
      odd += term;
      magnitude += std::abs(term);
    }
    CHECK(std::abs(odd) <= 5e-12 * std::max(1.0, magnitude));
  }
}
