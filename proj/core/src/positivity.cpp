// Copyright (c) 2026 The svqe developers
// SPDX-License-Identifier: Apache-2.0

#include "svqe/positivity.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "svqe/errors.hpp"

namespace svqe {

double min_eigenvalue(const PauliVector& vec) {
  const DensityMatrix rho = reconstruct(vec);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(rho.mat);
  return eig.eigenvalues()(0);
}

Eigen::VectorXd project_onto_simplex(const Eigen::VectorXd& values) {
  const Eigen::Index n = values.size();
  std::vector<double> sorted(values.data(), values.data() + n);
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0;
  double tau = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    cumulative += sorted[k];
    const double candidate = (1.0 - cumulative) / static_cast<double>(k + 1);
    if (sorted[k] + candidate > 0.0) tau = candidate;
  }
  Eigen::VectorXd out(n);
  for (Eigen::Index i = 0; i < n; ++i)
    out(i) = std::max(0.0, values(i) + tau);
  return out;
}

ProjectionReport project_physical(const PauliVector& vec) {
  if (std::abs(vec.coeffs[0] - 1.0) > 1e-9)
    throw DimensionMismatch("project_physical: identity coefficient must be 1");

  const DensityMatrix rho = reconstruct(vec);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(rho.mat);

  ProjectionReport report;
  report.input_min_eigenvalue = eig.eigenvalues()(0);

  const Eigen::VectorXd projected = project_onto_simplex(eig.eigenvalues());
  DensityMatrix physical;
  physical.n_qubits = vec.n_qubits;
  physical.mat = eig.eigenvectors() * projected.asDiagonal() *
                 eig.eigenvectors().adjoint();
  report.output = decompose(physical);
  report.l2_distance = (report.output.coeffs - vec.coeffs).norm();
  report.converged = true;
  return report;
}

RelativeImprovement relative_improvements(const PauliVector& raw,
                                          const Hamiltonian& h,
                                          const ReferenceSolution& ref,
                                          const SymmetrySpec& spec,
                                          bool enforce_positivity) {
  const PauliVector base =
      enforce_positivity ? project_physical(raw).output : raw;
  const PauliVector verified = symmetry_verify(base, spec);

  const double de_raw = std::abs(energy_error(base, ref, h));
  const double de_sv = std::abs(energy_error(verified, ref, h));
  const double infid_raw = std::abs(1.0 - fidelity(base, ref));
  const double infid_sv = std::abs(1.0 - fidelity(verified, ref));

  constexpr double kTiny = 1e-12;
  constexpr double kInf = std::numeric_limits<double>::infinity();
  RelativeImprovement out;
  out.eta_E = de_sv < kTiny ? kInf : de_raw / de_sv;
  out.eta_F = infid_sv < kTiny ? kInf : infid_raw / infid_sv;
  return out;
}

}  // namespace svqe
