// Copyright (c) 2026 The svqe developers
// SPDX-License-Identifier: Apache-2.0

#ifndef SVQE_ANSATZ_HPP
#define SVQE_ANSATZ_HPP

#include <Eigen/Dense>
#include <cmath>

namespace svqe {

/// Ideal two-qubit ansatz state at exchange angle theta, after the virtual
/// Z frame correction: sin(theta)|01> + cos(theta)|10> in the |Q1 Q0> basis.
/// Sweeping theta over [0, 2pi) reaches every real-amplitude state of the
/// single-excitation subspace.
inline Eigen::Vector4cd ideal_ansatz_state(double theta) {
  Eigen::Vector4cd psi = Eigen::Vector4cd::Zero();
  psi(1) = std::sin(theta);
  psi(2) = std::cos(theta);
  return psi;
}

}  // namespace svqe

#endif  // SVQE_ANSATZ_HPP
