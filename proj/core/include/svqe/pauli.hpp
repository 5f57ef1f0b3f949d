// Copyright (c) 2026 The svqe developers
// SPDX-License-Identifier: Apache-2.0

#ifndef SVQE_PAULI_HPP
#define SVQE_PAULI_HPP

#include <Eigen/Dense>
#include <compare>
#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

namespace svqe {

using Complex = std::complex<double>;

/// An N-qubit Pauli string.
///
/// The leftmost factor acts on the highest-index qubit (for N = 2 the label
/// "ZI" puts Z on Q1 and I on Q0, and basis states read |Q1 Q0>). Labels are
/// totally ordered lexicographically with I < X < Y < Z, which coincides with
/// the numeric order of code(): the base-4 integer whose most significant
/// digit is the leftmost factor. code() is the canonical index into a
/// PauliVector.
class PauliLabel {
 public:
  PauliLabel(int n_qubits, std::uint32_t code);
  static PauliLabel from_string(std::string_view s);
  static PauliLabel identity(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  std::uint32_t code() const { return code_; }
  bool is_identity() const { return code_ == 0; }

  /// Factor on the given qubit: 0=I, 1=X, 2=Y, 3=Z.
  int factor(int qubit) const;

  std::string str() const;

  friend auto operator<=>(const PauliLabel&, const PauliLabel&) = default;

 private:
  int n_qubits_;
  std::uint32_t code_;
};

/// Real expansion coefficients rho_P = Tr[P rho] over the canonical basis.
/// coeffs has length 4^n_qubits; coeffs[0] (the identity) is 1 for any
/// normalized state.
struct PauliVector {
  int n_qubits = 0;
  Eigen::VectorXd coeffs;

  static PauliVector maximally_mixed(int n_qubits);

  double operator[](const PauliLabel& p) const { return coeffs[p.code()]; }
  double& operator[](const PauliLabel& p) { return coeffs[p.code()]; }
  double at(std::string_view label) const {
    return coeffs[PauliLabel::from_string(label).code()];
  }
  double& at(std::string_view label) {
    return coeffs[PauliLabel::from_string(label).code()];
  }
  std::uint32_t size() const { return static_cast<std::uint32_t>(coeffs.size()); }
};

/// Complex 2^N x 2^N state matrix. Hermiticity and unit trace are contracts;
/// positivity is not (tomographic reconstructions may violate it).
struct DensityMatrix {
  int n_qubits = 0;
  Eigen::MatrixXcd mat;

  double hermiticity_error() const {
    return (mat - mat.adjoint()).cwiseAbs().maxCoeff();
  }
  double trace_error() const { return std::abs(mat.trace() - Complex(1.0)); }
};

/// Dense matrix of a Pauli string (tensor product of 2x2 factors).
Eigen::MatrixXcd pauli_matrix(const PauliLabel& label);

/// rho_P = Tr[P rho] for every P. Throws NonHermitianInput if the matrix
/// fails the Hermiticity guard (1e-9 elementwise); the identity coefficient
/// is snapped to exactly 1 after checking |Tr rho - 1| < 1e-9.
PauliVector decompose(const DensityMatrix& rho);

/// rho = 2^-N sum_P rho_P P. Exact inverse of decompose.
DensityMatrix reconstruct(const PauliVector& vec);

struct SignedLabel {
  Complex phase;  // one of +1, -1, +i, -i
  PauliLabel label;
};

/// Matrix product of two Pauli strings: phase * matrix(label) == A * B.
/// The phase is real (+-1) exactly when A and B commute.
SignedLabel pauli_product(const PauliLabel& a, const PauliLabel& b);

bool commutes(const PauliLabel& a, const PauliLabel& b);

}  // namespace svqe

#endif  // SVQE_PAULI_HPP
