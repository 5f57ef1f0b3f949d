// Copyright (c) 2026 The svqe developers
// SPDX-License-Identifier: Apache-2.0

#ifndef SVQE_SYMMETRY_HPP
#define SVQE_SYMMETRY_HPP

#include <cstdint>

#include "svqe/pauli.hpp"

namespace svqe {

/// A Pauli symmetry operator S together with the target eigenvalue s.
struct SymmetrySpec {
  PauliLabel op;
  int eigenvalue = -1;  // +1 or -1

  SymmetrySpec(PauliLabel op, int eigenvalue);

  /// ZZ parity, odd sector -- the symmetry of the two-qubit problem.
  static SymmetrySpec zz_odd();
};

/// Projects a Pauli vector onto the <S> = s sector in coefficient space:
/// out[P] = (raw[P] + s*phi*raw[SP]) / (1 + s*raw[S]) for P commuting with
/// S (phi the sign of the product S*P), zero for anticommuting P. Throws
/// VanishingSupport when the sector weight denominator is below 1e-9.
PauliVector symmetry_verify(const PauliVector& raw, const SymmetrySpec& spec);

/// Matrix-space ground truth: M rho M / Tr[M rho] with M = (1 + s S)/2.
DensityMatrix projector_verify(const DensityMatrix& rho,
                               const SymmetrySpec& spec);

/// Monte Carlo estimate of the post-verification variance of one
/// coefficient under sampling noise: resamples coefficient noise at the
/// given n_meas, applies symmetry_verify, and returns the sample variance
/// of out[label] over n_boot replicas. Diverges as the sector weight
/// vanishes. The closed-form scaling is ~ 1/(n_meas (1 + s <S>)); only the
/// empirical estimate is asserted.
double sv_variance(const PauliVector& raw, const PauliLabel& label,
                   const SymmetrySpec& spec, std::int64_t n_meas, int n_boot,
                   std::uint64_t seed);

}  // namespace svqe

#endif  // SVQE_SYMMETRY_HPP
