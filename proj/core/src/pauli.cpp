// Copyright (c) 2026 The svqe developers
// SPDX-License-Identifier: Apache-2.0

#include "svqe/pauli.hpp"

#include <cmath>
#include <stdexcept>

#include "svqe/errors.hpp"

namespace svqe {

namespace {

constexpr char kFactorChars[4] = {'I', 'X', 'Y', 'Z'};

// P |k> = phase(k) |k ^ flip_mask>, one nonzero per column.
struct SparseAction {
  std::uint32_t flip_mask = 0;
  // phase for each computational basis column, length 2^n
  std::vector<Complex> phases;
};

SparseAction sparse_action(const PauliLabel& label) {
  const int n = label.n_qubits();
  const std::uint32_t dim = 1u << n;
  SparseAction act;
  act.phases.assign(dim, Complex(1.0, 0.0));
  for (int q = 0; q < n; ++q) {
    const int f = label.factor(q);
    if (f == 1 || f == 2) act.flip_mask |= (1u << q);
  }
  for (std::uint32_t k = 0; k < dim; ++k) {
    Complex phase(1.0, 0.0);
    for (int q = 0; q < n; ++q) {
      const bool bit = (k >> q) & 1u;
      switch (label.factor(q)) {
        case 0:  // I
        case 1:  // X
          break;
        case 2:  // Y: Y|0> = i|1>, Y|1> = -i|0>
          phase *= bit ? Complex(0.0, -1.0) : Complex(0.0, 1.0);
          break;
        case 3:  // Z
          if (bit) phase = -phase;
          break;
      }
    }
    act.phases[k] = phase;
  }
  return act;
}

}  // namespace

PauliLabel::PauliLabel(int n_qubits, std::uint32_t code)
    : n_qubits_(n_qubits), code_(code) {
  if (n_qubits < 1 || n_qubits > 15)
    throw std::invalid_argument("PauliLabel: unsupported qubit count");
  if (code >= (1u << (2 * n_qubits)))
    throw std::invalid_argument("PauliLabel: code out of range");
}

PauliLabel PauliLabel::from_string(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("PauliLabel: empty string");
  std::uint32_t code = 0;
  for (char c : s) {
    int f = -1;
    for (int i = 0; i < 4; ++i)
      if (c == kFactorChars[i]) f = i;
    if (f < 0) throw std::invalid_argument("PauliLabel: bad factor character");
    code = (code << 2) | static_cast<std::uint32_t>(f);
  }
  return PauliLabel(static_cast<int>(s.size()), code);
}

PauliLabel PauliLabel::identity(int n_qubits) { return {n_qubits, 0}; }

int PauliLabel::factor(int qubit) const {
  return static_cast<int>((code_ >> (2 * qubit)) & 3u);
}

std::string PauliLabel::str() const {
  std::string s(static_cast<std::size_t>(n_qubits_), 'I');
  for (int q = 0; q < n_qubits_; ++q)
    s[static_cast<std::size_t>(n_qubits_ - 1 - q)] = kFactorChars[factor(q)];
  return s;
}

PauliVector PauliVector::maximally_mixed(int n_qubits) {
  PauliVector v;
  v.n_qubits = n_qubits;
  v.coeffs = Eigen::VectorXd::Zero(1 << (2 * n_qubits));
  v.coeffs[0] = 1.0;
  return v;
}

Eigen::MatrixXcd pauli_matrix(const PauliLabel& label) {
  const int n = label.n_qubits();
  const std::uint32_t dim = 1u << n;
  const SparseAction act = sparse_action(label);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::uint32_t k = 0; k < dim; ++k)
    m(k ^ act.flip_mask, k) = act.phases[k];
  return m;
}

PauliVector decompose(const DensityMatrix& rho) {
  const std::uint32_t dim = 1u << rho.n_qubits;
  if (rho.mat.rows() != dim || rho.mat.cols() != dim)
    throw DimensionMismatch("decompose: matrix size does not match n_qubits");
  if (rho.hermiticity_error() > 1e-9)
    throw NonHermitianInput("decompose: input is not Hermitian");
  if (rho.trace_error() > 1e-9)
    throw NonHermitianInput("decompose: input trace is not 1");

  const std::uint32_t n_labels = 1u << (2 * rho.n_qubits);
  PauliVector out;
  out.n_qubits = rho.n_qubits;
  out.coeffs.resize(n_labels);
  for (std::uint32_t c = 0; c < n_labels; ++c) {
    const PauliLabel label(rho.n_qubits, c);
    const SparseAction act = sparse_action(label);
    // Tr[P rho] = sum_j P_{j, j^mask} rho_{j^mask, j}
    Complex tr(0.0, 0.0);
    for (std::uint32_t j = 0; j < dim; ++j) {
      const std::uint32_t k = j ^ act.flip_mask;
      tr += act.phases[k] * rho.mat(k, j);
    }
    if (std::abs(tr.imag()) > 1e-9)
      throw NonHermitianInput("decompose: coefficient has imaginary part");
    out.coeffs[c] = tr.real();
  }
  out.coeffs[0] = 1.0;
  return out;
}

DensityMatrix reconstruct(const PauliVector& vec) {
  const std::uint32_t n_labels = vec.size();
  if (n_labels != (1u << (2 * vec.n_qubits)))
    throw DimensionMismatch("reconstruct: coefficient count mismatch");
  const std::uint32_t dim = 1u << vec.n_qubits;
  const double scale = 1.0 / static_cast<double>(dim);
  DensityMatrix rho;
  rho.n_qubits = vec.n_qubits;
  rho.mat = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::uint32_t c = 0; c < n_labels; ++c) {
    const double coeff = vec.coeffs[c];
    if (coeff == 0.0) continue;
    const SparseAction act = sparse_action(PauliLabel(vec.n_qubits, c));
    for (std::uint32_t k = 0; k < dim; ++k)
      rho.mat(k ^ act.flip_mask, k) += scale * coeff * act.phases[k];
  }
  return rho;
}

SignedLabel pauli_product(const PauliLabel& a, const PauliLabel& b) {
  if (a.n_qubits() != b.n_qubits())
    throw DimensionMismatch("pauli_product: label lengths differ");
  // sigma_f sigma_g = phase * sigma_h: phase exponent table (powers of i)
  // and result factor, indexed [f][g].
  static constexpr int kResult[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kPhasePow[4][4] = {
      {0, 0, 0, 0}, {0, 0, 1, 3}, {0, 3, 0, 1}, {0, 1, 3, 0}};
  std::uint32_t code = 0;
  int pow = 0;  // exponent of i, mod 4
  for (int q = a.n_qubits() - 1; q >= 0; --q) {
    const int f = a.factor(q);
    const int g = b.factor(q);
    code = (code << 2) | static_cast<std::uint32_t>(kResult[f][g]);
    pow = (pow + kPhasePow[f][g]) & 3;
  }
  static constexpr Complex kI(0.0, 1.0);
  static const Complex kPhases[4] = {1.0, kI, -1.0, -kI};
  return {kPhases[pow], PauliLabel(a.n_qubits(), code)};
}

bool commutes(const PauliLabel& a, const PauliLabel& b) {
  return pauli_product(a, b).phase.imag() == 0.0;
}

}  // namespace svqe
