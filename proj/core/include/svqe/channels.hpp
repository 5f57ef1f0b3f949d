// Copyright (c) 2026 The svqe developers
// SPDX-License-Identifier: Apache-2.0

#ifndef SVQE_CHANNELS_HPP
#define SVQE_CHANNELS_HPP

#include <Eigen/Dense>

#include "svqe/pauli.hpp"

namespace svqe {

/// Pauli transfer matrix: the real 4^N x 4^N representation of a channel
/// acting on Pauli coefficient vectors, rows and columns in canonical label
/// order. Trace-preserving channels have first row (1, 0, ..., 0).
struct PTM {
  int n_qubits = 0;
  Eigen::MatrixXd mat;
};

/// Exchange gate U_theta: identity on |00> and |11>, rotation by
/// cos(theta) / i sin(theta) within span{|01>, |10>}.
Eigen::Matrix4cd exchange_unitary(double theta);

/// [R]_ij = 2^-N Tr[P_i U P_j U^dag]. Throws NonUnitaryInput if U fails the
/// 1e-10 unitarity check. Orthogonal for unitary input.
PTM ptm_of_unitary(const Eigen::MatrixXcd& u);

/// sigma of the quasi-static exchange-angle jitter from the reduced
/// dephasing time at the interaction point: sqrt(1 - exp(-t_int/t2_red)).
double sigma_from_t2red(double t_int_us, double t2_star_red_us);

/// Exchange-gate PTM averaged over a Gaussian angle deviation of width
/// sigma (Gauss-Hermite quadrature, 15 nodes). sigma = 0 returns the
/// coherent PTM exactly.
PTM flux_averaged_ptm(double theta, double sigma);

/// Single-qubit amplitude damping toward |0>, decay probability p.
PTM amplitude_damping_channel(double p);

/// Single-qubit pure dephasing: <X>,<Y> scaled by (1-p), <Z> preserved.
PTM dephasing_channel(double p);

/// Embeds a single-qubit PTM on the given qubit of an n-qubit register.
PTM embed_on_qubit(const PTM& single, int qubit, int n_qubits);

/// Applies a channel to a state in Pauli-coefficient form.
PauliVector apply(const PTM& channel, const PauliVector& state);

/// Composition: first `first`, then `second` (matrix product second*first).
PTM compose(const PTM& second, const PTM& first);

/// Choi matrix of the channel, normalized to unit trace for TP inputs.
/// Positive semidefiniteness witnesses complete positivity.
Eigen::MatrixXcd choi_matrix(const PTM& channel);

/// Smallest eigenvalue of the (Hermitian part of the) Choi matrix.
double choi_min_eigenvalue(const PTM& channel);

/// Max deviation of the first row from (1, 0, ..., 0).
double trace_preservation_error(const PTM& channel);

}  // namespace svqe

#endif  // SVQE_CHANNELS_HPP
