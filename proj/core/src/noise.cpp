// Copyright (c) 2026 The svqe developers
// SPDX-License-Identifier: Apache-2.0

#include "svqe/noise.hpp"

#include <cmath>

#include "svqe/errors.hpp"

namespace svqe {

std::string to_string(ErrorLevel level) {
  switch (level) {
    case ErrorLevel::IDEAL:          return "IDEAL";
    case ErrorLevel::DEPHASING:      return "DEPHASING";
    case ErrorLevel::RELAXATION:     return "RELAXATION";
    case ErrorLevel::RESIDUAL:       return "RESIDUAL";
    case ErrorLevel::GATE_DEPHASING: return "GATE_DEPHASING";
  }
  throw InvalidNoiseModel("unknown error level");
}

ErrorLevel error_level_from_string(const std::string& s) {
  if (s == "IDEAL") return ErrorLevel::IDEAL;
  if (s == "DEPHASING") return ErrorLevel::DEPHASING;
  if (s == "RELAXATION") return ErrorLevel::RELAXATION;
  if (s == "RESIDUAL") return ErrorLevel::RESIDUAL;
  if (s == "GATE_DEPHASING") return ErrorLevel::GATE_DEPHASING;
  throw InvalidNoiseModel("unknown error level `" + s + "`");
}

double NoiseModel::t_phi_us(const QubitNoiseParams& q) {
  const double rate = 1.0 / q.t2_star_us - 0.5 / q.t1_us;
  if (rate <= 0.0)
    throw InvalidNoiseModel("t_phi: T2* exceeds the 2*T1 limit");
  return 1.0 / rate;
}

void NoiseModel::validate() const {
  for (const auto* q : {&q0, &q1}) {
    if (q->t1_us <= 0.0 || q->t2_star_us <= 0.0)
      throw InvalidNoiseModel("NoiseModel: time constants must be positive");
    // physicality of the pure dephasing rate, small tolerance
    if (1.0 / q->t2_star_us < 0.5 / q->t1_us - 1e-9)
      throw InvalidNoiseModel("NoiseModel: T2* exceeds the 2*T1 limit");
    if (q->p_residual < 0.0 || q->p_residual >= 0.5)
      throw InvalidNoiseModel("NoiseModel: p_residual outside [0, 0.5)");
  }
  if (t2_star_red_us <= 0.0 || t_int_us < 0.0)
    throw InvalidNoiseModel("NoiseModel: bad gate timing parameters");
  if (!std::isfinite(t_int_us))
    throw InvalidNoiseModel("NoiseModel: t_int must be finite");
}

NoiseModel ideal_noise_model() {
  NoiseModel m;
  m.q0 = {1.0, 1.0, 0.0};
  m.q1 = {1.0, 1.0, 0.0};
  m.t2_star_red_us = 1.0;
  m.t_int_us = 0.0;
  m.level = ErrorLevel::IDEAL;
  return m;
}

}  // namespace svqe
