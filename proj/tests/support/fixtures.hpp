// Copyright (c) 2026 The svqe developers
// SPDX-License-Identifier: Apache-2.0

#ifndef SVQE_TESTS_FIXTURES_HPP
#define SVQE_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "svqe/hamiltonian.hpp"
#include "svqe/noise.hpp"
#include "svqe/vqe.hpp"

namespace fixtures {

/// Measured transmon parameters used across the regression suite
/// (relaxation, Ramsey dephasing, residual excitation per qubit, the
/// reduced Q0 dephasing time at the interaction point, and the exchange
/// gate duration).
inline svqe::NoiseModel device_noise(
    svqe::ErrorLevel level = svqe::ErrorLevel::GATE_DEPHASING) {
  svqe::NoiseModel m;
  m.q1 = {9.8, 9.0, 0.0134};
  m.q0 = {11.7, 17.3, 0.0025};
  m.t2_star_red_us = 0.995;
  m.t_int_us = 0.0005;
  m.level = level;
  return m;
}

/// Parameter fluctuation spread of the same device.
inline svqe::FluctuationSpec device_fluctuation(int n_samples = 400) {
  svqe::FluctuationSpec spec;
  spec.q1 = {9.8, 1.0, 9.0, 1.3, 0.0134, 0.0020};
  spec.q0 = {11.7, 0.6, 17.3, 1.0, 0.0025, 0.0009};
  spec.n_samples = n_samples;
  return spec;
}

inline std::string data_path(const std::string& name) {
  return std::string(SVQE_DATA_DIR) + "/" + name;
}

inline const std::vector<svqe::Hamiltonian>& bundled_hamiltonians() {
  static const std::vector<svqe::Hamiltonian> table =
      svqe::load_coefficients(data_path("h2_sto3g.csv"));
  return table;
}

/// Distance between exchange angles modulo the pi periodicity of the
/// ansatz state.
inline double theta_distance(double a, double b) {
  constexpr double pi = 3.141592653589793238462643383279502884;
  double d = std::fmod(std::abs(a - b), pi);
  return std::min(d, pi - d);
}

}  // namespace fixtures

#endif  // SVQE_TESTS_FIXTURES_HPP
