// Copyright (c) 2026 The svqe developers
// SPDX-License-Identifier: Apache-2.0

#include "svqe/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "svqe/errors.hpp"
#include "svqe/rng.hpp"
#include "svqe/tomography.hpp"

namespace svqe {

namespace {
constexpr double kSectorEps = 1e-9;
}

SymmetrySpec::SymmetrySpec(PauliLabel op_in, int eigenvalue_in)
    : op(op_in), eigenvalue(eigenvalue_in) {
  if (op.is_identity())
    throw std::invalid_argument("SymmetrySpec: operator must not be identity");
  if (eigenvalue != 1 && eigenvalue != -1)
    throw std::invalid_argument("SymmetrySpec: eigenvalue must be +-1");
}

SymmetrySpec SymmetrySpec::zz_odd() {
  return {PauliLabel::from_string("ZZ"), -1};
}

PauliVector symmetry_verify(const PauliVector& raw, const SymmetrySpec& spec) {
  if (raw.n_qubits != spec.op.n_qubits())
    throw DimensionMismatch("symmetry_verify: qubit count mismatch");
  const double s = static_cast<double>(spec.eigenvalue);
  const double denom = 1.0 + s * raw[spec.op];
  if (denom <= kSectorEps)
    throw VanishingSupport("symmetry_verify: no weight in the target sector");

  PauliVector out = raw;
  for (std::uint32_t c = 0; c < raw.size(); ++c) {
    const PauliLabel p(raw.n_qubits, c);
    const SignedLabel sp = pauli_product(spec.op, p);
    if (sp.phase.imag() != 0.0) {
      // anticommuting coefficients have no weight in either sector
      out.coeffs[c] = 0.0;
      continue;
    }
    const double phi = sp.phase.real();
    out.coeffs[c] = (raw.coeffs[c] + s * phi * raw[sp.label]) / denom;
  }
  out.coeffs[0] = 1.0;
  out[spec.op] = s;  // exact by construction
  return out;
}

DensityMatrix projector_verify(const DensityMatrix& rho,
                               const SymmetrySpec& spec) {
  if (rho.n_qubits != spec.op.n_qubits())
    throw DimensionMismatch("projector_verify: qubit count mismatch");
  const double s = static_cast<double>(spec.eigenvalue);
  const Eigen::MatrixXcd proj =
      0.5 * (Eigen::MatrixXcd::Identity(rho.mat.rows(), rho.mat.cols()) +
             s * pauli_matrix(spec.op));
  const Eigen::MatrixXcd projected = proj * rho.mat * proj;
  const double weight = projected.trace().real();
  if (weight <= 0.5 * kSectorEps)
    throw VanishingSupport("projector_verify: no weight in the target sector");
  DensityMatrix out;
  out.n_qubits = rho.n_qubits;
  out.mat = projected / weight;
  return out;
}

double sv_variance(const PauliVector& raw, const PauliLabel& label,
                   const SymmetrySpec& spec, std::int64_t n_meas, int n_boot,
                   std::uint64_t seed) {
  if (n_boot < 100)
    throw std::invalid_argument("sv_variance: n_boot must be >= 100");
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int b = 0; b < n_boot; ++b) {
    const PauliVector noisy = gaussian_coefficient_sampling(
        raw, n_meas, derive_seed(seed, 0xB007ULL, static_cast<std::uint64_t>(b)));
    const double value = symmetry_verify(noisy, spec)[label];
    sum += value;
    sum_sq += value * value;
  }
  const double n = static_cast<double>(n_boot);
  return std::max(0.0, (sum_sq - sum * sum / n) / (n - 1.0));
}

}  // namespace svqe
