// Copyright (c) 2026 The svqe developers
// SPDX-License-Identifier: Apache-2.0

#include "svqe/pauli.hpp"

#include <cmath>

#include "doctest.h"
#include "support/oracles.hpp"
#include "svqe/errors.hpp"

using namespace svqe;

namespace {

DensityMatrix dm(const Eigen::Matrix4cd& m) {
  return DensityMatrix{2, m};
}

Eigen::Matrix4cd pure(const Eigen::Vector4cd& psi) {
  return psi * psi.adjoint();
}

}  // namespace

TEST_CASE("labels: ordering, strings, factors") {
  const auto zi = PauliLabel::from_string("ZI");
  CHECK(zi.code() == 12);  // Z=3 on the leftmost digit
  CHECK(zi.factor(1) == 3);
  CHECK(zi.factor(0) == 0);
  CHECK(zi.str() == "ZI");
  CHECK(PauliLabel::identity(2).str() == "II");
  CHECK(PauliLabel::from_string("II") < PauliLabel::from_string("IX"));
  CHECK(PauliLabel::from_string("IZ") < PauliLabel::from_string("XI"));
  // canonical index order is lexicographic with I<X<Y<Z
  for (std::uint32_t c = 0; c + 1 < 16; ++c)
    CHECK(PauliLabel(2, c).str() < PauliLabel(2, c + 1).str());
}

TEST_CASE("pauli_matrix: II, ZI, XX") {
  CHECK((pauli_matrix(PauliLabel::from_string("II")) -
         Eigen::Matrix4cd::Identity())
            .cwiseAbs()
            .maxCoeff() == 0.0);

  const Eigen::MatrixXcd zi = pauli_matrix(PauliLabel::from_string("ZI"));
  Eigen::Vector4cd diag;
  diag << 1, 1, -1, -1;  // basis |Q1 Q0>
  CHECK((zi - Eigen::Matrix4cd(diag.asDiagonal())).cwiseAbs().maxCoeff() ==
        0.0);

  // hand tensor product oracle
  const Eigen::MatrixXcd xx = pauli_matrix(PauliLabel::from_string("XX"));
  CHECK((xx - oracle::pauli_matrix("XX")).cwiseAbs().maxCoeff() == 0.0);
  for (int i = 0; i < 4; ++i)
    CHECK(xx(i, 3 - i) == Complex(1.0, 0.0));  // anti-diagonal ones
}

TEST_CASE("pauli_matrix matches the oracle for all 16 labels") {
  for (std::uint32_t c = 0; c < 16; ++c) {
    const PauliLabel label(2, c);
    CHECK((pauli_matrix(label) - oracle::pauli_matrix(label.str()))
              .cwiseAbs()
              .maxCoeff() == 0.0);
  }
}

TEST_CASE("decompose: computational and mixed states") {
  Eigen::Vector4cd e00;
  e00 << 1, 0, 0, 0;
  const PauliVector v = decompose(dm(pure(e00)));
  CHECK(v.at("ZI") == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(v.at("IZ") == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(v.at("ZZ") == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(v.at("XX") == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(v.at("YY") == doctest::Approx(0.0).epsilon(1e-12));

  const PauliVector mixed =
      decompose(dm(0.25 * Eigen::Matrix4cd::Identity()));
  CHECK(mixed.coeffs[0] == 1.0);
  CHECK(mixed.coeffs.tail(15).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("decompose: exchange-rotated state against the trace oracle") {
  // (|01> + i|10>)/sqrt(2): the state the exchange gate reaches at
  // theta = pi/4 before the frame correction
  Eigen::Vector4cd psi;
  psi << 0, 1.0 / std::sqrt(2.0), Complex(0.0, 1.0) / std::sqrt(2.0), 0;
  const Eigen::Matrix4cd rho = pure(psi);
  const PauliVector v = decompose(dm(rho));
  const Eigen::VectorXd expected = oracle::pauli_coefficients(rho);
  for (int c = 0; c < 16; ++c)
    CHECK(v.coeffs[c] == doctest::Approx(expected(c)).epsilon(1e-12));
  CHECK(v.at("ZZ") == doctest::Approx(-1.0).epsilon(1e-12));
  // the single-excitation coherence of this state sits in XY/YX
  CHECK(std::abs(v.at("XY")) + std::abs(v.at("YX")) > 0.5);
}

TEST_CASE("decompose rejects non-Hermitian input") {
  Eigen::Matrix4cd bad = Eigen::Matrix4cd::Zero();
  bad(0, 0) = 1.0;
  bad(0, 1) = Complex(0.5, 0.5);  // no conjugate partner
  CHECK_THROWS_AS(decompose(dm(bad)), NonHermitianInput);
}

TEST_CASE("reconstruct: named examples") {
  const DensityMatrix mixed = reconstruct(PauliVector::maximally_mixed(2));
  CHECK((mixed.mat - 0.25 * Eigen::Matrix4cd::Identity())
            .cwiseAbs()
            .maxCoeff() < 1e-15);

  PauliVector odd = PauliVector::maximally_mixed(2);
  odd.at("ZZ") = -1.0;
  const DensityMatrix rho = reconstruct(odd);
  Eigen::Matrix4cd expected = Eigen::Matrix4cd::Zero();
  expected(1, 1) = 0.5;
  expected(2, 2) = 0.5;
  CHECK((rho.mat - expected).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("round trips on random states") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Eigen::Matrix4cd m = seed % 2
                                   ? oracle::random_density_matrix(seed)
                                   : oracle::random_hermitian_unit_trace(seed);
    const PauliVector v = decompose(dm(m));
    const DensityMatrix back = reconstruct(v);
    CHECK((back.mat - m).cwiseAbs().maxCoeff() < 1e-12);
    const PauliVector v2 = decompose(back);
    CHECK((v2.coeffs - v.coeffs).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("decompose of PSD states stays in [-1, 1]") {
  for (std::uint64_t seed = 100; seed < 140; ++seed) {
    const PauliVector v =
        decompose(dm(oracle::random_density_matrix(seed, 1 + seed % 4)));
    CHECK(v.coeffs.maxCoeff() <= 1.0 + 1e-9);
    CHECK(v.coeffs.minCoeff() >= -1.0 - 1e-9);
  }
}

TEST_CASE("pauli_product: named examples") {
  auto check = [](const char* a, const char* b, Complex phase,
                  const char* result) {
    const SignedLabel p = pauli_product(PauliLabel::from_string(a),
                                        PauliLabel::from_string(b));
    CHECK(p.phase == phase);
    CHECK(p.label.str() == result);
  };
  check("ZZ", "IZ", Complex(1, 0), "ZI");
  check("ZZ", "XX", Complex(-1, 0), "YY");
  check("ZI", "XI", Complex(0, 1), "YI");
}

TEST_CASE("pauli_product against matrix multiplication, all pairs") {
  for (std::uint32_t a = 0; a < 16; ++a) {
    for (std::uint32_t b = 0; b < 16; ++b) {
      const PauliLabel la(2, a), lb(2, b);
      const SignedLabel p = pauli_product(la, lb);
      const Eigen::MatrixXcd lhs = p.phase * oracle::pauli_matrix(p.label.str());
      const Eigen::MatrixXcd rhs =
          oracle::pauli_matrix(la.str()) * oracle::pauli_matrix(lb.str());
      CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-15);
      // phase is real exactly for commuting pairs
      const bool commute =
          (rhs - oracle::pauli_matrix(lb.str()) * oracle::pauli_matrix(la.str()))
              .cwiseAbs()
              .maxCoeff() < 1e-15;
      CHECK(commutes(la, lb) == commute);
      CHECK((p.phase.imag() == 0.0) == commute);
    }
  }
}
