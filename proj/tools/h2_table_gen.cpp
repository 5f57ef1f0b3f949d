// Copyright (c) 2026 The svqe developers
// SPDX-License-Identifier: Apache-2.0
//
// Generates the bundled two-qubit hydrogen coefficient table
// (data/h2_sto3g.csv) from scratch: STO-3G integrals over two s-type
// contracted Gaussians, symmetry-adapted molecular orbitals, full CI in the
// minimal basis, and projection onto the qubit Hamiltonian
//   H = h_II II + h_ZI ZI + h_IZ IZ + h_XX XX + h_YY YY + h_ZZ ZZ
// with the single-excitation subspace hosting the two closed-shell
// configurations: |10> <-> sigma_g^2, |01> <-> sigma_u^2, coupled by the
// exchange integral; |00>/|11> carry the triplet/open-shell-singlet levels.

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "svqe/hamiltonian.hpp"

namespace {

constexpr double kBohrPerAngstrom = 1.8897261254578281;

// STO-3G hydrogen: exponents and contraction coefficients (zeta = 1.24).
constexpr std::array<double, 3> kAlpha = {3.42525091, 0.62391373, 0.16885540};
constexpr std::array<double, 3> kCoeff = {0.15432897, 0.53532814, 0.44463454};

double boys_f0(double t) {
  if (t < 1e-12) return 1.0 - t / 3.0;
  return 0.5 * std::sqrt(std::numbers::pi / t) * std::erf(std::sqrt(t));
}

struct Shell {
  double z = 0.0;  // center on the molecular axis, bohr
  std::array<double, 3> norm{};

  explicit Shell(double z_in) : z(z_in) {
    for (int i = 0; i < 3; ++i)
      norm[i] = std::pow(2.0 * kAlpha[i] / std::numbers::pi, 0.75);
  }
};

double overlap(const Shell& a, const Shell& b) {
  double s = 0.0;
  const double rab2 = (a.z - b.z) * (a.z - b.z);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double p = kAlpha[i] + kAlpha[j];
      const double mu = kAlpha[i] * kAlpha[j] / p;
      s += kCoeff[i] * kCoeff[j] * a.norm[i] * b.norm[j] *
           std::pow(std::numbers::pi / p, 1.5) * std::exp(-mu * rab2);
    }
  return s;
}

double kinetic(const Shell& a, const Shell& b) {
  double t = 0.0;
  const double rab2 = (a.z - b.z) * (a.z - b.z);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double p = kAlpha[i] + kAlpha[j];
      const double mu = kAlpha[i] * kAlpha[j] / p;
      const double s_prim = std::pow(std::numbers::pi / p, 1.5) *
                            std::exp(-mu * rab2);
      t += kCoeff[i] * kCoeff[j] * a.norm[i] * b.norm[j] * mu *
           (3.0 - 2.0 * mu * rab2) * s_prim;
    }
  return t;
}

// attraction to a unit charge at z = c
double nuclear(const Shell& a, const Shell& b, double c) {
  double v = 0.0;
  const double rab2 = (a.z - b.z) * (a.z - b.z);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double p = kAlpha[i] + kAlpha[j];
      const double mu = kAlpha[i] * kAlpha[j] / p;
      const double pz = (kAlpha[i] * a.z + kAlpha[j] * b.z) / p;
      v += -kCoeff[i] * kCoeff[j] * a.norm[i] * b.norm[j] *
           (2.0 * std::numbers::pi / p) * std::exp(-mu * rab2) *
           boys_f0(p * (pz - c) * (pz - c));
    }
  return v;
}

// chemists' notation (ab|cd)
double eri(const Shell& a, const Shell& b, const Shell& c, const Shell& d) {
  double value = 0.0;
  const double rab2 = (a.z - b.z) * (a.z - b.z);
  const double rcd2 = (c.z - d.z) * (c.z - d.z);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double p = kAlpha[i] + kAlpha[j];
      const double mu = kAlpha[i] * kAlpha[j] / p;
      const double pz = (kAlpha[i] * a.z + kAlpha[j] * b.z) / p;
      const double bra = kCoeff[i] * kCoeff[j] * a.norm[i] * b.norm[j] *
                         std::exp(-mu * rab2);
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          const double q = kAlpha[k] + kAlpha[l];
          const double nu = kAlpha[k] * kAlpha[l] / q;
          const double qz = (kAlpha[k] * c.z + kAlpha[l] * d.z) / q;
          const double ket = kCoeff[k] * kCoeff[l] * c.norm[k] * d.norm[l] *
                             std::exp(-nu * rcd2);
          const double rho = p * q / (p + q);
          value += bra * ket * 2.0 * std::pow(std::numbers::pi, 2.5) /
                   (p * q * std::sqrt(p + q)) *
                   boys_f0(rho * (pz - qz) * (pz - qz));
        }
    }
  return value;
}

struct QubitCoefficients {
  double h_ii, h_zi, h_iz, h_xx, h_yy, h_zz;
  double fci_ground;  // for the self-check
};

QubitCoefficients coefficients_at(double r_angstrom) {
  const double r = r_angstrom * kBohrPerAngstrom;
  const Shell s1(0.0), s2(r);

  // renormalize the contracted function (the tabulated coefficients are
  // normalized only approximately)
  const double self = overlap(s1, s1);
  const double renorm = 1.0 / self;  // applied per bra-ket pair

  const double s12 = overlap(s1, s2) * renorm;
  const double t11 = kinetic(s1, s1) * renorm;
  const double t12 = kinetic(s1, s2) * renorm;
  const double v11 = (nuclear(s1, s1, 0.0) + nuclear(s1, s1, r)) * renorm;
  const double v12 = (nuclear(s1, s2, 0.0) + nuclear(s1, s2, r)) * renorm;
  const double h11 = t11 + v11;
  const double h12 = t12 + v12;

  const double renorm2 = renorm * renorm;
  const double eri_1111 = eri(s1, s1, s1, s1) * renorm2;
  const double eri_1122 = eri(s1, s1, s2, s2) * renorm2;
  const double eri_1212 = eri(s1, s2, s1, s2) * renorm2;
  const double eri_1112 = eri(s1, s1, s1, s2) * renorm2;

  // symmetry-adapted molecular orbitals g/u
  const double cg = 1.0 / std::sqrt(2.0 * (1.0 + s12));
  const double cu = 1.0 / std::sqrt(2.0 * (1.0 - s12));
  const double h_gg = 2.0 * cg * cg * (h11 + h12);
  const double h_uu = 2.0 * cu * cu * (h11 - h12);

  // MO two-electron integrals from the four distinct AO values
  const double j_gg =
      2.0 * std::pow(cg, 4) *
      (eri_1111 + eri_1122 + 2.0 * eri_1212 + 4.0 * eri_1112);
  const double j_uu =
      2.0 * std::pow(cu, 4) *
      (eri_1111 + eri_1122 + 2.0 * eri_1212 - 4.0 * eri_1112);
  const double j_gu =
      2.0 * cg * cg * cu * cu * (eri_1111 + eri_1122 - 2.0 * eri_1212);
  const double k_gu =
      2.0 * cg * cg * cu * cu * (eri_1111 - eri_1122);

  const double e_nuc = 1.0 / r;
  const double e_gg = 2.0 * h_gg + j_gg + e_nuc;        // |10>
  const double e_uu = 2.0 * h_uu + j_uu + e_nuc;        // |01>
  const double e_t = h_gg + h_uu + j_gu - k_gu + e_nuc;  // |00>
  const double e_s = h_gg + h_uu + j_gu + k_gu + e_nuc;  // |11>

  QubitCoefficients c{};
  c.h_ii = 0.25 * (e_t + e_uu + e_gg + e_s);
  c.h_zi = 0.25 * (e_t + e_uu - e_gg - e_s);
  c.h_iz = 0.25 * (e_t - e_uu + e_gg - e_s);
  c.h_zz = 0.25 * (e_t - e_uu - e_gg + e_s);
  c.h_xx = 0.5 * k_gu;
  c.h_yy = 0.5 * k_gu;

  // gerade-sector FCI ground energy for verification
  const double mid = 0.5 * (e_gg + e_uu);
  const double half_gap = 0.5 * (e_uu - e_gg);
  c.fci_ground = mid - std::sqrt(half_gap * half_gap + k_gu * k_gu);
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string out_path = argc > 1 ? argv[1] : "data/h2_sto3g.csv";
  const std::vector<double> grid = {0.25, 0.35, 0.45, 0.55, 0.65, 0.75,
                                    0.85, 1.00, 1.20, 1.45, 1.70, 2.00};

  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "cannot open " << out_path << "\n";
    return 1;
  }
  out << "R_angstrom,h_II,h_ZI,h_IZ,h_XX,h_YY,h_ZZ\n";
  out.precision(12);

  bool ok = true;
  for (double r : grid) {
    const QubitCoefficients c = coefficients_at(r);
    out << r << ',' << c.h_ii << ',' << c.h_zi << ',' << c.h_iz << ','
        << c.h_xx << ',' << c.h_yy << ',' << c.h_zz << '\n';

    // self-check: the qubit Hamiltonian must reproduce the FCI ground energy
    svqe::Hamiltonian h;
    h.bond_distance = r;
    h.terms[svqe::PauliLabel::from_string("II")] = c.h_ii;
    h.terms[svqe::PauliLabel::from_string("ZI")] = c.h_zi;
    h.terms[svqe::PauliLabel::from_string("IZ")] = c.h_iz;
    h.terms[svqe::PauliLabel::from_string("XX")] = c.h_xx;
    h.terms[svqe::PauliLabel::from_string("YY")] = c.h_yy;
    h.terms[svqe::PauliLabel::from_string("ZZ")] = c.h_zz;
    const svqe::ReferenceSolution ref = svqe::exact_solution(h);
    const double mismatch = std::abs(ref.ground_energy - c.fci_ground);
    std::printf("R = %5.2f A   E0 = %+.9f Ha   theta* = %.6f   check %.2e\n",
                r, ref.ground_energy, ref.optimal_theta, mismatch);
    if (mismatch > 1e-10) ok = false;
  }
  if (!ok) {
    std::cerr << "self-check failed\n";
    return 1;
  }
  std::cout << "wrote " << out_path << "\n";
  return 0;
}
