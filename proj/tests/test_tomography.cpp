// Copyright (c) 2026 The svqe developers
// SPDX-License-Identifier: Apache-2.0

#include "svqe/tomography.hpp"

#include <cmath>
#include <set>

#include "doctest.h"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "svqe/errors.hpp"
#include "svqe/rng.hpp"
#include "svqe/simulator.hpp"

using namespace svqe;

TEST_CASE("prerotation_set: grid order, unitarity, axis coverage") {
  const auto& set = prerotation_set();
  REQUIRE(set.size() == 36);

  // first element is the identity pair
  CHECK((set[0].r_q1 - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() ==
        0.0);
  CHECK((set[0].r_q0 - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() ==
        0.0);

  for (const auto& pre : set) {
    CHECK((pre.r_q1.adjoint() * pre.r_q1 - Eigen::Matrix2cd::Identity())
              .cwiseAbs()
              .maxCoeff() < 1e-14);
    CHECK((pre.r_q0.adjoint() * pre.r_q0 - Eigen::Matrix2cd::Identity())
              .cwiseAbs()
              .maxCoeff() < 1e-14);
    // combined() is the tensor product acting on |Q1 Q0>
    const Eigen::Matrix4cd expected = oracle::kron(pre.r_q1, pre.r_q0);
    CHECK((pre.combined() - expected).cwiseAbs().maxCoeff() < 1e-14);
  }

  // Q1 index is the major one: the Q0 gate cycles with period 6
  for (int i = 0; i < 6; ++i)
    CHECK((set[6 * i].r_q0 - set[0].r_q0).cwiseAbs().maxCoeff() == 0.0);

  // conjugating Z by the six gates reaches all six axis directions
  const Eigen::Matrix2cd z = oracle::pauli_2x2(3);
  std::set<int> directions;
  for (int g = 0; g < 6; ++g) {
    const Eigen::Matrix2cd img = set[g].r_q0.adjoint() * z * set[g].r_q0;
    for (int axis = 1; axis <= 3; ++axis) {
      const double overlap =
          0.5 * (oracle::pauli_2x2(axis) * img).trace().real();
      if (std::abs(overlap - 1.0) < 1e-12) directions.insert(axis);
      if (std::abs(overlap + 1.0) < 1e-12) directions.insert(-axis);
    }
  }
  CHECK(directions.size() == 6);
}

TEST_CASE("calibrate_betas: exact limit is the pure digitization model") {
  const MeasurementModel m =
      calibrate_betas(fixtures::device_noise(ErrorLevel::IDEAL), 0, 1);
  CHECK((m.betas - MeasurementModel::ideal().betas).cwiseAbs().maxCoeff() <
        1e-14);
}

TEST_CASE("calibrate_betas: residual excitation leaves operators uncorrupted") {
  // the calibration solves against the residual-corrected state
  // expectations, so the extracted operators stay pure digitization
  const MeasurementModel m =
      calibrate_betas(fixtures::device_noise(ErrorLevel::RESIDUAL), 0, 1);
  CHECK((m.betas - MeasurementModel::ideal().betas).cwiseAbs().maxCoeff() <
        1e-12);
}

TEST_CASE("calibrate_betas: shot noise shrinks as n^-1/2") {
  const NoiseModel noise = fixtures::device_noise(ErrorLevel::RESIDUAL);
  auto spread = [&](std::int64_t n) {
    std::vector<double> own;
    for (std::uint64_t seed = 0; seed < 160; ++seed)
      own.push_back(
          calibrate_betas(noise, n, seed).betas(kChannelQ1, 2));  // ZI
    return std::sqrt(oracle::variance(own));
  };
  const double coarse = spread(100);
  const double fine = spread(10000);
  CHECK(coarse / fine == doctest::Approx(10.0).epsilon(0.35));
}

TEST_CASE("calibrate_betas: singular system is reported") {
  NoiseModel noise = fixtures::device_noise(ErrorLevel::RESIDUAL);
  noise.q0.p_residual = 0.4999999999;  // wipes out the Q0 contrast
  CHECK_THROWS_AS(calibrate_betas(noise, 0, 1), SingularCalibration);
}

TEST_CASE("measure_state: deterministic outcomes are exact at any shot count") {
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  rho(0, 0) = 1.0;  // |00><00|
  const DensityMatrix state{2, rho};
  const auto records = measure_state(state, MeasurementModel::ideal(), 50, 99);
  // gates I (index 0) and X pi (index 1) map Z to +-Z: outcomes are
  // deterministic and the digitized averages are exactly +-1
  for (int g1 : {0, 1}) {
    for (int g0 : {0, 1}) {
      const auto& rec = records[6 * g1 + g0];
      CHECK(rec.m_q1 == (g1 == 0 ? 1.0 : -1.0));
      CHECK(rec.m_q0 == (g0 == 0 ? 1.0 : -1.0));
      CHECK(rec.m_corr == rec.m_q1 * rec.m_q0);
    }
  }
}

TEST_CASE("measure_state: exact records equal operator expectations") {
  const DensityMatrix rho{2, oracle::random_density_matrix(5)};
  const MeasurementModel model = MeasurementModel::ideal();
  const auto records = measure_state(rho, model, 0, 0);
  const auto& pres = prerotation_set();
  for (int ch = 0; ch < 3; ++ch) {
    const Eigen::Matrix4cd op = model.channel_operator(ch);
    for (const auto& rec : records) {
      const Eigen::Matrix4cd r = pres[rec.prerotation_index].combined();
      const double expected = (r.adjoint() * op * r * rho.mat).trace().real();
      const double got = ch == kChannelQ1   ? rec.m_q1
                         : ch == kChannelQ0 ? rec.m_q0
                                            : rec.m_corr;
      CHECK(got == doctest::Approx(expected).epsilon(1e-12));
    }
  }
}

TEST_CASE("measure_state: shot-noise variance follows the Bernoulli law") {
  const DensityMatrix rho =
      prepare_ansatz(0.9, fixtures::device_noise(ErrorLevel::IDEAL));
  const MeasurementModel model = MeasurementModel::ideal();
  const auto exact = measure_state(rho, model, 0, 0);

  const int pre_index = 8;  // a non-deterministic setting
  const std::int64_t n = 100;
  std::vector<double> samples;
  for (std::uint64_t seed = 0; seed < 3000; ++seed)
    samples.push_back(measure_state(rho, model, n, seed)[pre_index].m_q1);
  const double mu = exact[pre_index].m_q1;
  REQUIRE(std::abs(mu) < 0.95);
  const double expected_var = (1.0 - mu * mu) / static_cast<double>(n);
  CHECK(oracle::variance(samples) ==
        doctest::Approx(expected_var).epsilon(0.10));
  const double stderr_mean = std::sqrt(expected_var / samples.size());
  CHECK(std::abs(oracle::mean(samples) - mu) < 4.0 * stderr_mean);
}

TEST_CASE("linear_inversion: exact recovery and the mixed-state case") {
  const MeasurementModel model = MeasurementModel::ideal();

  const DensityMatrix mixed{2, 0.25 * Eigen::Matrix4cd::Identity()};
  const PauliVector flat =
      linear_inversion(measure_state(mixed, model, 0, 0), model);
  CHECK(flat.coeffs[0] == 1.0);
  CHECK(flat.coeffs.tail(15).cwiseAbs().maxCoeff() < 1e-12);

  for (std::uint64_t seed = 21; seed < 31; ++seed) {
    const DensityMatrix rho{2, oracle::random_density_matrix(seed)};
    const PauliVector recovered =
        linear_inversion(measure_state(rho, model, 0, 0), model);
    CHECK((recovered.coeffs - decompose(rho).coeffs).cwiseAbs().maxCoeff() <
          1e-10);
  }
}

TEST_CASE("linear_inversion: calibrated betas recover the state too") {
  const NoiseModel noise = fixtures::device_noise(ErrorLevel::RESIDUAL);
  const MeasurementModel model = calibrate_betas(noise, 0, 1);
  const DensityMatrix rho = prepare_ansatz(1.2, noise);
  const PauliVector recovered =
      linear_inversion(measure_state(rho, model, 0, 0), model);
  CHECK((recovered.coeffs - decompose(rho).coeffs).cwiseAbs().maxCoeff() <
        1e-10);
}

TEST_CASE("linear_inversion: rank deficiency is reported") {
  const DensityMatrix rho{2, oracle::random_density_matrix(3)};
  MeasurementModel broken;
  broken.betas.setZero();  // operators carry no information
  const auto records = measure_state(rho, broken, 0, 0);
  CHECK_THROWS_AS(linear_inversion(records, broken), RankDeficient);
}

TEST_CASE("linear_inversion: reconstruction is unbiased") {
  const DensityMatrix rho = prepare_ansatz(2.8, fixtures::device_noise());
  const PauliVector truth = decompose(rho);
  const MeasurementModel model = MeasurementModel::ideal();
  const std::int64_t n = 400;
  const int n_seeds = 1000;

  Eigen::VectorXd sum = Eigen::VectorXd::Zero(16);
  Eigen::VectorXd sum_sq = Eigen::VectorXd::Zero(16);
  for (int s = 0; s < n_seeds; ++s) {
    const PauliVector rec =
        linear_inversion(measure_state(rho, model, n, 1000 + s), model);
    sum += rec.coeffs;
    sum_sq += rec.coeffs.cwiseProduct(rec.coeffs);
  }
  for (int p = 1; p < 16; ++p) {
    const double mean = sum(p) / n_seeds;
    const double var =
        (sum_sq(p) - sum(p) * sum(p) / n_seeds) / (n_seeds - 1.0);
    const double stderr_mean = std::sqrt(var / n_seeds);
    CHECK(std::abs(mean - truth.coeffs[p]) <= 3.5 * stderr_mean + 1e-12);
  }
}

TEST_CASE("linear_inversion: coefficient error scales as n^-1/2") {
  const DensityMatrix rho = prepare_ansatz(2.8, fixtures::device_noise());
  const PauliVector truth = decompose(rho);
  const MeasurementModel model = MeasurementModel::ideal();
  auto rms_error = [&](std::int64_t n) {
    double total = 0.0;
    const int n_seeds = 120;
    for (int s = 0; s < n_seeds; ++s) {
      const PauliVector rec =
          linear_inversion(measure_state(rho, model, n, 77 + s), model);
      total += (rec.coeffs - truth.coeffs).squaredNorm();
    }
    return std::sqrt(total / n_seeds);
  };
  const double ratio = rms_error(500) / rms_error(5000);
  CHECK(ratio == doctest::Approx(std::sqrt(10.0)).epsilon(0.12));
}

TEST_CASE("gaussian_coefficient_sampling: limits and calibrated variance") {
  PauliVector vec = PauliVector::maximally_mixed(2);
  vec.at("ZZ") = -1.0;
  vec.at("XX") = 0.6;

  // infinite shots: unchanged
  const PauliVector same = gaussian_coefficient_sampling(vec, 0, 5);
  CHECK((same.coeffs - vec.coeffs).cwiseAbs().maxCoeff() == 0.0);

  // saturated coefficients have zero variance; identity untouched
  std::vector<double> xx;
  for (std::uint64_t seed = 0; seed < 4000; ++seed) {
    const PauliVector noisy = gaussian_coefficient_sampling(vec, 250, seed);
    CHECK(noisy.coeffs[0] == 1.0);
    CHECK(noisy.at("ZZ") == -1.0);
    xx.push_back(noisy.at("XX"));
  }
  const double expected = (1.0 - 0.6 * 0.6) / 250.0;
  CHECK(oracle::variance(xx) == doctest::Approx(expected).epsilon(0.05));
}
