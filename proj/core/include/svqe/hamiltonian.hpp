// Copyright (c) 2026 The svqe developers
// SPDX-License-Identifier: Apache-2.0

#ifndef SVQE_HAMILTONIAN_HPP
#define SVQE_HAMILTONIAN_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "svqe/pauli.hpp"

namespace svqe {

/// Qubit Hamiltonian H = sum_P h_P P at a given bond distance.
/// Coefficients are in Hartree, bond_distance in Angstrom.
struct Hamiltonian {
  int n_qubits = 2;
  std::map<PauliLabel, double> terms;
  double bond_distance = 0.0;

  Eigen::MatrixXcd matrix() const;
};

/// Exact ground-state data for one Hamiltonian.
struct ReferenceSolution {
  double ground_energy = 0.0;       // Hartree
  DensityMatrix ground_state;       // rank-1 projector
  PauliVector ground_pauli;         // decompose(ground_state), cached
  double optimal_theta = 0.0;       // argmin over the ideal ansatz
  bool degenerate = false;          // two lowest eigenvalues within 1e-9
};

/// Loads Hamiltonians from CSV with the exact header
/// `R_angstrom,h_II,h_ZI,h_IZ,h_XX,h_YY,h_ZZ`.
/// Result is sorted by bond distance; duplicate R values are rejected.
std::vector<Hamiltonian> load_coefficients(const std::string& path);
std::vector<Hamiltonian> load_coefficients(std::istream& in);

/// Variational energy E = sum_P rho_P h_P over the Hamiltonian support.
double energy(const PauliVector& rho, const Hamiltonian& h);

/// Dense diagonalization plus a 1500-point scan (golden-section refined) for
/// the optimal exchange angle of the ideal ansatz.
ReferenceSolution exact_solution(const Hamiltonian& h);

/// E(rho) - E0. Negative values are possible for unphysical rho.
double energy_error(const PauliVector& rho, const ReferenceSolution& ref,
                    const Hamiltonian& h);

/// Tr[rho rho0] = 2^-N sum_P rho_P rho0_P; equals the ground-state overlap
/// for the pure reference.
double fidelity(const PauliVector& rho, const ReferenceSolution& ref);

}  // namespace svqe

#endif  // SVQE_HAMILTONIAN_HPP
