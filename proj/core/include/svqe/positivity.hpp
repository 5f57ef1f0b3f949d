// Copyright (c) 2026 The svqe developers
// SPDX-License-Identifier: Apache-2.0

#ifndef SVQE_POSITIVITY_HPP
#define SVQE_POSITIVITY_HPP

#include "svqe/hamiltonian.hpp"
#include "svqe/pauli.hpp"
#include "svqe/symmetry.hpp"

namespace svqe {

/// Result of projecting a reconstructed state onto the physical set.
struct ProjectionReport {
  double input_min_eigenvalue = 0.0;
  PauliVector output;
  double l2_distance = 0.0;  // Pauli-coefficient L2 norm moved
  bool converged = true;
};

/// Minimal eigenvalue of reconstruct(vec); negative values manifest
/// unphysicality.
double min_eigenvalue(const PauliVector& vec);

/// Euclidean projection of a coefficient vector onto the physical set
/// {reconstruct(out) PSD, out[II] = 1}. The Pauli-coefficient L2 norm is
/// proportional to the Frobenius norm, so the unique minimizer shares the
/// input's eigenvectors and its eigenvalues are the probability-simplex
/// projection of the input's (water-filling threshold). Always feasible.
ProjectionReport project_physical(const PauliVector& vec);

/// Euclidean projection of a real vector onto the probability simplex
/// {x >= 0, sum x = 1}. Exposed for reuse and testing.
Eigen::VectorXd project_onto_simplex(const Eigen::VectorXd& values);

/// Relative improvement ratios of symmetry verification.
struct RelativeImprovement {
  double eta_E = 0.0;  // |dE_raw| / |dE_sv|, +inf when dE_sv vanishes
  double eta_F = 0.0;  // |1-F_raw| / |1-F_sv|, +inf when infid_sv vanishes
};

/// Optionally projects raw to the physical set, applies symmetry
/// verification, and forms the two improvement ratios. Ratios above 1 mean
/// verification helped. Denominators below 1e-12 yield +infinity.
RelativeImprovement relative_improvements(const PauliVector& raw,
                                          const Hamiltonian& h,
                                          const ReferenceSolution& ref,
                                          const SymmetrySpec& spec,
                                          bool enforce_positivity);

}  // namespace svqe

#endif  // SVQE_POSITIVITY_HPP
