// Copyright (c) 2026 The svqe developers
// SPDX-License-Identifier: Apache-2.0

#include "svqe/simulator.hpp"

#include <cmath>
#include <numbers>

#include "svqe/errors.hpp"

namespace svqe {

namespace {

constexpr int kQ0 = 0;
constexpr int kQ1 = 1;

// X pi pulse as a single-qubit PTM: X -> X, Y -> -Y, Z -> -Z.
PTM x_pi_ptm() {
  PTM r;
  r.n_qubits = 1;
  r.mat = Eigen::Matrix4d::Identity();
  r.mat(2, 2) = -1.0;
  r.mat(3, 3) = -1.0;
  return r;
}

// Virtual Z frame rotation on Q0 cancelling the i phase that the exchange
// gate puts on |01> relative to |10>: diag(1, -i) on Q0.
PTM frame_correction_ptm() {
  Eigen::Matrix2cd u;
  u << Complex(1.0, 0.0), Complex(0.0, 0.0),
       Complex(0.0, 0.0), Complex(0.0, -1.0);
  // kron(I on Q1, u on Q0)
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m.block<2, 2>(0, 0) = u;
  m.block<2, 2>(2, 2) = u;
  return ptm_of_unitary(m);
}

// Product state with <Z> = 1 - 2 p_excited per qubit; X, Y coefficients 0.
PauliVector thermal_initial_state(double p_exc_q1, double p_exc_q0) {
  PauliVector v = PauliVector::maximally_mixed(2);
  const double z1 = 1.0 - 2.0 * p_exc_q1;
  const double z0 = 1.0 - 2.0 * p_exc_q0;
  v.at("ZI") = z1;
  v.at("IZ") = z0;
  v.at("ZZ") = z1 * z0;
  return v;
}

void apply_half_gate_noise(PauliVector& state, const NoiseModel& noise) {
  const double half = 0.5 * noise.t_int_us;
  if (noise.level >= ErrorLevel::DEPHASING) {
    const double p = 1.0 - std::exp(-half / NoiseModel::t_phi_us(noise.q1));
    state = apply(embed_on_qubit(dephasing_channel(p), kQ1, 2), state);
  }
  if (noise.level >= ErrorLevel::RELAXATION) {
    const double p1 = 1.0 - std::exp(-half / noise.q1.t1_us);
    const double p0 = 1.0 - std::exp(-half / noise.q0.t1_us);
    state = apply(embed_on_qubit(amplitude_damping_channel(p1), kQ1, 2), state);
    state = apply(embed_on_qubit(amplitude_damping_channel(p0), kQ0, 2), state);
  }
}

}  // namespace

PauliVector prepare_ansatz_vector(double theta, const NoiseModel& noise) {
  noise.validate();

  const bool with_residual = noise.level >= ErrorLevel::RESIDUAL;
  PauliVector state =
      thermal_initial_state(with_residual ? noise.q1.p_residual : 0.0,
                            with_residual ? noise.q0.p_residual : 0.0);

  state = apply(embed_on_qubit(x_pi_ptm(), kQ1, 2), state);

  apply_half_gate_noise(state, noise);
  const double sigma = noise.level >= ErrorLevel::GATE_DEPHASING
                           ? sigma_from_t2red(noise.t_int_us,
                                              noise.t2_star_red_us)
                           : 0.0;
  state = apply(flux_averaged_ptm(theta, sigma), state);
  apply_half_gate_noise(state, noise);

  static const PTM frame = frame_correction_ptm();
  state = apply(frame, state);
  return state;
}

DensityMatrix prepare_ansatz(double theta, const NoiseModel& noise) {
  return reconstruct(prepare_ansatz_vector(theta, noise));
}

namespace {

double rotated_fidelity(const DensityMatrix& rho,
                        const ReferenceSolution& ref, double phi1,
                        double phi0) {
  Eigen::Vector4cd diag;
  // Rz(phi) = diag(e^{-i phi/2}, e^{i phi/2}) on each qubit
  const Complex a1 = std::exp(Complex(0.0, -0.5 * phi1));
  const Complex b1 = std::exp(Complex(0.0, 0.5 * phi1));
  const Complex a0 = std::exp(Complex(0.0, -0.5 * phi0));
  const Complex b0 = std::exp(Complex(0.0, 0.5 * phi0));
  diag << a1 * a0, a1 * b0, b1 * a0, b1 * b0;
  const Eigen::Matrix4cd u = diag.asDiagonal();
  const Eigen::Matrix4cd rotated = u * rho.mat * u.adjoint();
  return (rotated * ref.ground_state.mat).trace().real();
}

}  // namespace

PhaseCorrection find_phase_correction(const DensityMatrix& rho,
                                      const ReferenceSolution& ref) {
  constexpr int kGrid = 48;
  const double step = 2.0 * std::numbers::pi / kGrid;

  PhaseCorrection best;
  best.fidelity = rotated_fidelity(rho, ref, 0.0, 0.0);
  for (int i = 0; i < kGrid; ++i) {
    for (int j = 0; j < kGrid; ++j) {
      const double f = rotated_fidelity(rho, ref, i * step, j * step);
      if (f > best.fidelity) {
        best = {i * step, j * step, f};
      }
    }
  }

  // cyclic coordinate refinement (golden section per axis)
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double width = step;
  for (int round = 0; round < 40 && width > 1e-12; ++round) {
    for (int axis = 0; axis < 2; ++axis) {
      double lo = (axis == 0 ? best.phi_q1 : best.phi_q0) - width;
      double hi = (axis == 0 ? best.phi_q1 : best.phi_q0) + width;
      auto eval = [&](double x) {
        return axis == 0 ? rotated_fidelity(rho, ref, x, best.phi_q0)
                         : rotated_fidelity(rho, ref, best.phi_q1, x);
      };
      double c = hi - invphi * (hi - lo);
      double d = lo + invphi * (hi - lo);
      double fc = eval(c), fd = eval(d);
      while (hi - lo > 1e-13) {
        if (fc > fd) {
          hi = d;
          d = c;
          fd = fc;
          c = hi - invphi * (hi - lo);
          fc = eval(c);
        } else {
          lo = c;
          c = d;
          fc = fd;
          d = lo + invphi * (hi - lo);
          fd = eval(d);
        }
      }
      const double x = 0.5 * (lo + hi);
      const double fx = eval(x);
      if (fx > best.fidelity) {
        best.fidelity = fx;
        (axis == 0 ? best.phi_q1 : best.phi_q0) = x;
      }
    }
    width *= 0.35;
  }
  return best;
}

DensityMatrix virtual_phase_correction(const DensityMatrix& rho,
                                       const ReferenceSolution& ref) {
  const PhaseCorrection corr = find_phase_correction(rho, ref);
  Eigen::Vector4cd diag;
  const Complex a1 = std::exp(Complex(0.0, -0.5 * corr.phi_q1));
  const Complex b1 = std::exp(Complex(0.0, 0.5 * corr.phi_q1));
  const Complex a0 = std::exp(Complex(0.0, -0.5 * corr.phi_q0));
  const Complex b0 = std::exp(Complex(0.0, 0.5 * corr.phi_q0));
  diag << a1 * a0, a1 * b0, b1 * a0, b1 * b0;
  const Eigen::Matrix4cd u = diag.asDiagonal();
  DensityMatrix out;
  out.n_qubits = rho.n_qubits;
  out.mat = u * rho.mat * u.adjoint();
  return out;
}

}  // namespace svqe
