// Copyright (c) 2026 The svqe developers
// SPDX-License-Identifier: Apache-2.0

#include "svqe/channels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "svqe/errors.hpp"
#include "svqe/quadrature.hpp"

namespace svqe {

namespace {

int qubits_of_dim(Eigen::Index dim) {
  int n = 0;
  while ((Eigen::Index(1) << n) < dim) ++n;
  if ((Eigen::Index(1) << n) != dim)
    throw DimensionMismatch("matrix dimension is not a power of two");
  return n;
}

// dense Pauli matrices are reused heavily by the transfer-matrix and Choi
// constructions; cache the one- and two-qubit sets
const Eigen::MatrixXcd& cached_pauli(int n, int code) {
  static const std::vector<Eigen::MatrixXcd> one_qubit = [] {
    std::vector<Eigen::MatrixXcd> set;
    for (int c = 0; c < 4; ++c) set.push_back(pauli_matrix(PauliLabel(1, c)));
    return set;
  }();
  static const std::vector<Eigen::MatrixXcd> two_qubit = [] {
    std::vector<Eigen::MatrixXcd> set;
    for (int c = 0; c < 16; ++c) set.push_back(pauli_matrix(PauliLabel(2, c)));
    return set;
  }();
  if (n == 1) return one_qubit[code];
  if (n == 2) return two_qubit[code];
  thread_local Eigen::MatrixXcd scratch;
  scratch = pauli_matrix(PauliLabel(n, code));
  return scratch;
}

}  // namespace

Eigen::Matrix4cd exchange_unitary(double theta) {
  if (!std::isfinite(theta))
    throw std::invalid_argument("exchange_unitary: theta must be finite");
  const double c = std::cos(theta);
  const Complex is(0.0, std::sin(theta));
  Eigen::Matrix4cd u = Eigen::Matrix4cd::Zero();
  u(0, 0) = 1.0;
  u(1, 1) = c;
  u(1, 2) = is;
  u(2, 1) = is;
  u(2, 2) = c;
  u(3, 3) = 1.0;
  return u;
}

PTM ptm_of_unitary(const Eigen::MatrixXcd& u) {
  const Eigen::Index dim = u.rows();
  if (u.cols() != dim) throw DimensionMismatch("ptm_of_unitary: not square");
  const int n = qubits_of_dim(dim);
  if ((u.adjoint() * u - Eigen::MatrixXcd::Identity(dim, dim))
          .cwiseAbs()
          .maxCoeff() > 1e-10)
    throw NonUnitaryInput("ptm_of_unitary: input is not unitary");

  const int n_labels = 1 << (2 * n);
  const double scale = 1.0 / static_cast<double>(dim);
  PTM r;
  r.n_qubits = n;
  r.mat.resize(n_labels, n_labels);
  for (int j = 0; j < n_labels; ++j) {
    const Eigen::MatrixXcd conj = u * cached_pauli(n, j) * u.adjoint();
    for (int i = 0; i < n_labels; ++i) {
      // Tr[P C] = sum_{km} P_km C_mk without forming the product
      const Complex t =
          cached_pauli(n, i).transpose().cwiseProduct(conj).sum();
      r.mat(i, j) = (t * scale).real();
    }
  }
  return r;
}

double sigma_from_t2red(double t_int_us, double t2_star_red_us) {
  if (t_int_us < 0.0 || t2_star_red_us <= 0.0)
    throw std::invalid_argument("sigma_from_t2red: bad durations");
  return std::sqrt(1.0 - std::exp(-t_int_us / t2_star_red_us));
}

PTM flux_averaged_ptm(double theta, double sigma) {
  if (sigma < 0.0)
    throw std::invalid_argument("flux_averaged_ptm: sigma must be >= 0");
  if (sigma == 0.0) return ptm_of_unitary(exchange_unitary(theta));

  // Gaussian average via substitution delta = sqrt(2) sigma x, so the
  // normalized weights are w_k / sqrt(pi).
  static const GaussHermiteRule rule = gauss_hermite(15);
  const double norm = 1.0 / std::sqrt(std::numbers::pi);
  PTM avg;
  avg.n_qubits = 2;
  avg.mat = Eigen::MatrixXd::Zero(16, 16);
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    const double delta = std::numbers::sqrt2 * sigma * rule.nodes[k];
    const PTM point = ptm_of_unitary(exchange_unitary(theta + delta));
    avg.mat += (rule.weights[k] * norm) * point.mat;
  }
  return avg;
}

PTM amplitude_damping_channel(double p) {
  if (p < 0.0 || p > 1.0)
    throw std::invalid_argument("amplitude_damping_channel: p out of range");
  const double keep = std::sqrt(1.0 - p);
  PTM r;
  r.n_qubits = 1;
  r.mat = Eigen::Matrix4d::Zero();
  r.mat(0, 0) = 1.0;
  r.mat(1, 1) = keep;
  r.mat(2, 2) = keep;
  r.mat(3, 0) = p;
  r.mat(3, 3) = 1.0 - p;
  return r;
}

PTM dephasing_channel(double p) {
  if (p < 0.0 || p > 1.0)
    throw std::invalid_argument("dephasing_channel: p out of range");
  PTM r;
  r.n_qubits = 1;
  r.mat = Eigen::Matrix4d::Identity();
  r.mat(1, 1) = 1.0 - p;
  r.mat(2, 2) = 1.0 - p;
  return r;
}

PTM embed_on_qubit(const PTM& single, int qubit, int n_qubits) {
  if (single.n_qubits != 1)
    throw DimensionMismatch("embed_on_qubit: channel must be single-qubit");
  if (qubit < 0 || qubit >= n_qubits)
    throw DimensionMismatch("embed_on_qubit: qubit index out of range");
  const int n_labels = 1 << (2 * n_qubits);
  PTM full;
  full.n_qubits = n_qubits;
  full.mat = Eigen::MatrixXd::Zero(n_labels, n_labels);
  const int shift = 2 * qubit;
  for (int i = 0; i < n_labels; ++i) {
    const int fi = (i >> shift) & 3;
    const int rest_i = i & ~(3 << shift);
    for (int fj = 0; fj < 4; ++fj) {
      const double w = single.mat(fi, fj);
      if (w == 0.0) continue;
      const int j = rest_i | (fj << shift);
      full.mat(i, j) = w;
    }
  }
  return full;
}

PauliVector apply(const PTM& channel, const PauliVector& state) {
  if (channel.n_qubits != state.n_qubits)
    throw DimensionMismatch("apply: qubit count mismatch");
  PauliVector out;
  out.n_qubits = state.n_qubits;
  out.coeffs = channel.mat * state.coeffs;
  return out;
}

PTM compose(const PTM& second, const PTM& first) {
  if (second.n_qubits != first.n_qubits)
    throw DimensionMismatch("compose: qubit count mismatch");
  PTM r;
  r.n_qubits = first.n_qubits;
  r.mat = second.mat * first.mat;
  return r;
}

Eigen::MatrixXcd choi_matrix(const PTM& channel) {
  const int n = channel.n_qubits;
  const int dim = 1 << n;
  const int n_labels = 1 << (2 * n);
  const double scale = 1.0 / static_cast<double>(dim);

  // Channel applied to the matrix unit E_ab, via its Pauli expansion
  // E_ab = 2^-N sum_P (P)_ba P.
  std::vector<Eigen::MatrixXcd> paulis(n_labels);
  for (int p = 0; p < n_labels; ++p) paulis[p] = cached_pauli(n, p);

  Eigen::MatrixXcd choi = Eigen::MatrixXcd::Zero(dim * dim, dim * dim);
  for (int a = 0; a < dim; ++a) {
    for (int b = 0; b < dim; ++b) {
      // coefficients of the matrix unit are in general complex; the real
      // PTM acts on them componentwise
      Eigen::VectorXcd cvec(n_labels);
      for (int p = 0; p < n_labels; ++p) cvec(p) = paulis[p](b, a);
      const Eigen::VectorXcd out_coeffs = channel.mat * cvec;
      Eigen::MatrixXcd lambda_eab = Eigen::MatrixXcd::Zero(dim, dim);
      for (int p = 0; p < n_labels; ++p)
        lambda_eab += scale * out_coeffs(p) * paulis[p];
      // choi block (a, b) of the bipartite matrix E_ab (x) Lambda(E_ab)
      choi.block(a * dim, b * dim, dim, dim) += lambda_eab;
    }
  }
  return choi * scale;  // unit trace for trace-preserving channels
}

double choi_min_eigenvalue(const PTM& channel) {
  const Eigen::MatrixXcd choi = choi_matrix(channel);
  const Eigen::MatrixXcd herm = 0.5 * (choi + choi.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(herm);
  return eig.eigenvalues()(0);
}

double trace_preservation_error(const PTM& channel) {
  double err = std::abs(channel.mat(0, 0) - 1.0);
  for (Eigen::Index j = 1; j < channel.mat.cols(); ++j)
    err = std::max(err, std::abs(channel.mat(0, j)));
  return err;
}

}  // namespace svqe
