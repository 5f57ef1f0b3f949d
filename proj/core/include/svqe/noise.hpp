// Copyright (c) 2026 The svqe developers
// SPDX-License-Identifier: Apache-2.0

#ifndef SVQE_NOISE_HPP
#define SVQE_NOISE_HPP

#include <string>

namespace svqe {

/// Cumulative error-model levels; each level enables every error source of
/// the levels below it.
enum class ErrorLevel {
  IDEAL = 0,          // noiseless circuit at the chosen angle
  DEPHASING = 1,      // + Q1 sweet-spot dephasing around the exchange gate
  RELAXATION = 2,     // + amplitude damping on both qubits
  RESIDUAL = 3,       // + residual excitation in the initial state
  GATE_DEPHASING = 4  // + quasi-static exchange-angle jitter
};

std::string to_string(ErrorLevel level);
ErrorLevel error_level_from_string(const std::string& s);

struct QubitNoiseParams {
  double t1_us = 0.0;
  double t2_star_us = 0.0;
  double p_residual = 0.0;
};

/// Calibrated device noise parameters plus the enabled error level.
struct NoiseModel {
  QubitNoiseParams q0;
  QubitNoiseParams q1;
  double t2_star_red_us = 0.0;  // Q0 dephasing time at the interaction point
  double t_int_us = 0.0;        // exchange-gate duration
  ErrorLevel level = ErrorLevel::IDEAL;

  /// Pure dephasing time from 1/T2* = 1/Tphi + 1/(2 T1).
  static double t_phi_us(const QubitNoiseParams& q);

  /// Throws InvalidNoiseModel on unphysical parameters.
  void validate() const;

  NoiseModel with_level(ErrorLevel new_level) const {
    NoiseModel copy = *this;
    copy.level = new_level;
    return copy;
  }
};

/// Noiseless model (IDEAL level, placeholder time constants).
NoiseModel ideal_noise_model();

}  // namespace svqe

#endif  // SVQE_NOISE_HPP
