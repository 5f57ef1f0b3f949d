// Copyright (c) 2026 The svqe developers
// SPDX-License-Identifier: Apache-2.0

#include "svqe/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>

#include "svqe/ansatz.hpp"
#include "svqe/errors.hpp"

namespace svqe {

namespace {

const char* const kCsvHeader = "R_angstrom,h_II,h_ZI,h_IZ,h_XX,h_YY,h_ZZ";
const char* const kH2Labels[6] = {"II", "ZI", "IZ", "XX", "YY", "ZZ"};

std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

std::string strip(const std::string& s) {
  auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return {};
  auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

double ideal_ansatz_energy(double theta, const Eigen::MatrixXcd& h) {
  const Eigen::Vector4cd psi = ideal_ansatz_state(theta);
  return (psi.adjoint() * h * psi)(0).real();
}

// Golden-section minimization on [lo, hi] for a unimodal bracket.
double golden_minimize(const std::function<double(double)>& f, double lo,
                       double hi, double tol) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

Eigen::MatrixXcd Hamiltonian::matrix() const {
  const int dim = 1 << n_qubits;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [label, coeff] : terms) m += coeff * pauli_matrix(label);
  return m;
}

std::vector<Hamiltonian> load_coefficients(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("load_coefficients: cannot open " + path);
  return load_coefficients(in);
}

std::vector<Hamiltonian> load_coefficients(std::istream& in) {
  std::string line;
  if (!std::getline(in, line))
    throw SchemaError("load_coefficients: empty file");
  if (strip(line) != kCsvHeader)
    throw SchemaError(std::string("load_coefficients: header must be `") +
                      kCsvHeader + "`, got `" + strip(line) + "`");

  std::vector<Hamiltonian> result;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (strip(line).empty()) continue;
    const auto fields = split_csv_row(line);
    if (fields.size() != 7)
      throw ParseError("load_coefficients: expected 7 fields", row,
                       fields.size());
    double values[7];
    for (std::size_t i = 0; i < 7; ++i) {
      try {
        std::size_t consumed = 0;
        values[i] = std::stod(strip(fields[i]), &consumed);
        if (consumed != strip(fields[i]).size())
          throw std::invalid_argument("trailing characters");
      } catch (const std::exception&) {
        throw ParseError("load_coefficients: bad number `" + strip(fields[i]) +
                             "`",
                         row, i + 1);
      }
      if (!std::isfinite(values[i]))
        throw ParseError("load_coefficients: non-finite value", row, i + 1);
    }
    Hamiltonian h;
    h.n_qubits = 2;
    h.bond_distance = values[0];
    for (int t = 0; t < 6; ++t)
      h.terms[PauliLabel::from_string(kH2Labels[t])] = values[t + 1];
    result.push_back(std::move(h));
  }
  if (result.empty())
    throw SchemaError("load_coefficients: no data rows");

  std::sort(result.begin(), result.end(),
            [](const Hamiltonian& a, const Hamiltonian& b) {
              return a.bond_distance < b.bond_distance;
            });
  for (std::size_t i = 1; i < result.size(); ++i)
    if (result[i].bond_distance == result[i - 1].bond_distance)
      throw ParseError("load_coefficients: duplicate R value", i + 1, 1);
  return result;
}

double energy(const PauliVector& rho, const Hamiltonian& h) {
  if (rho.n_qubits != h.n_qubits)
    throw DimensionMismatch("energy: qubit count mismatch");
  double e = 0.0;
  for (const auto& [label, coeff] : h.terms) e += coeff * rho[label];
  return e;
}

ReferenceSolution exact_solution(const Hamiltonian& h) {
  const Eigen::MatrixXcd hm = h.matrix();
  if ((hm - hm.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
    throw NonHermitianInput("exact_solution: Hamiltonian is not Hermitian");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(hm);
  ReferenceSolution ref;
  ref.ground_energy = eig.eigenvalues()(0);
  ref.degenerate = (eig.eigenvalues()(1) - eig.eigenvalues()(0)) < 1e-9;

  const Eigen::VectorXcd v0 = eig.eigenvectors().col(0);
  ref.ground_state.n_qubits = h.n_qubits;
  ref.ground_state.mat = v0 * v0.adjoint();
  ref.ground_pauli = decompose(ref.ground_state);

  // 1500-point scan over [0, 2pi), then golden-section refinement of the
  // best bracket down to 1e-10.
  if (h.n_qubits == 2) {
    const int n_scan = 1500;
    const double step = 2.0 * std::numbers::pi / n_scan;
    auto f = [&hm](double theta) { return ideal_ansatz_energy(theta, hm); };
    int best = 0;
    double best_e = f(0.0);
    for (int i = 1; i < n_scan; ++i) {
      const double e = f(i * step);
      if (e < best_e) {
        best_e = e;
        best = i;
      }
    }
    const double lo = (best - 1) * step;
    const double hi = (best + 1) * step;
    double theta = golden_minimize(f, lo, hi, 1e-11);
    theta = std::fmod(theta, 2.0 * std::numbers::pi);
    if (theta < 0.0) theta += 2.0 * std::numbers::pi;
    ref.optimal_theta = theta;
  }
  return ref;
}

double energy_error(const PauliVector& rho, const ReferenceSolution& ref,
                    const Hamiltonian& h) {
  return energy(rho, h) - ref.ground_energy;
}

double fidelity(const PauliVector& rho, const ReferenceSolution& ref) {
  if (rho.n_qubits != ref.ground_pauli.n_qubits)
    throw DimensionMismatch("fidelity: qubit count mismatch");
  const double dim = static_cast<double>(1u << rho.n_qubits);
  return rho.coeffs.dot(ref.ground_pauli.coeffs) / dim;
}

}  // namespace svqe
