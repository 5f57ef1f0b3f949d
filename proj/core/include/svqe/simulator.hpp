// Copyright (c) 2026 The svqe developers
// SPDX-License-Identifier: Apache-2.0

#ifndef SVQE_SIMULATOR_HPP
#define SVQE_SIMULATOR_HPP

#include "svqe/channels.hpp"
#include "svqe/hamiltonian.hpp"
#include "svqe/noise.hpp"
#include "svqe/pauli.hpp"

namespace svqe {

/// Full-density-matrix simulation of the two-qubit ansatz circuit.
///
/// Sequence: thermal initial state (residual excitation at level >=
/// RESIDUAL), ideal X pi pulse on Q1, then the exchange gate with
/// half-duration error channels on either side -- Q1 dephasing at level >=
/// DEPHASING, amplitude damping on both qubits at level >= RELAXATION --
/// and Gaussian exchange-angle averaging at level >= GATE_DEPHASING.
/// The deterministic single-qubit phase of the exchange gate is removed by
/// a virtual Z frame rotation, so the IDEAL output at angle theta is
/// sin(theta)|01> + cos(theta)|10>.
DensityMatrix prepare_ansatz(double theta, const NoiseModel& noise);

/// Same state in Pauli-coefficient form (the simulator's native output).
PauliVector prepare_ansatz_vector(double theta, const NoiseModel& noise);

/// Applies single-qubit Z rotations chosen to maximize fidelity to the
/// reference ground state (coarse grid plus coordinate refinement). The
/// returned fidelity is never below the input's.
DensityMatrix virtual_phase_correction(const DensityMatrix& rho,
                                       const ReferenceSolution& reference);

/// Z-rotation angles found by virtual_phase_correction.
struct PhaseCorrection {
  double phi_q1 = 0.0;
  double phi_q0 = 0.0;
  double fidelity = 0.0;
};
PhaseCorrection find_phase_correction(const DensityMatrix& rho,
                                      const ReferenceSolution& reference);

}  // namespace svqe

#endif  // SVQE_SIMULATOR_HPP
