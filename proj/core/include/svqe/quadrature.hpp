// Copyright (c) 2026 The svqe developers
// SPDX-License-Identifier: Apache-2.0

#ifndef SVQE_QUADRATURE_HPP
#define SVQE_QUADRATURE_HPP

#include <vector>

namespace svqe {

/// Gauss-Hermite rule: integrates f against exp(-x^2) on the real line,
/// exact for polynomials up to degree 2n-1. Nodes ascend; weights sum to
/// sqrt(pi). Computed by the Golub-Welsch eigenvalue method.
struct GaussHermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussHermiteRule gauss_hermite(int n);

}  // namespace svqe

#endif  // SVQE_QUADRATURE_HPP
