// Copyright (c) 2026 The svqe developers
// SPDX-License-Identifier: Apache-2.0

#include "svqe/tomography.hpp"

#include <cmath>
#include <numbers>

#include "svqe/errors.hpp"
#include "svqe/rng.hpp"

namespace svqe {

namespace {

Eigen::Matrix2cd rx(double angle) {
  const double c = std::cos(0.5 * angle);
  const Complex ms(0.0, -std::sin(0.5 * angle));
  Eigen::Matrix2cd m;
  m << c, ms, ms, c;
  return m;
}

Eigen::Matrix2cd ry(double angle) {
  const double c = std::cos(0.5 * angle);
  const double s = std::sin(0.5 * angle);
  Eigen::Matrix2cd m;
  m << c, -s, s, c;
  return m;
}

std::array<Eigen::Matrix2cd, 6> single_qubit_rotations() {
  constexpr double pi = std::numbers::pi;
  return {Eigen::Matrix2cd::Identity(), rx(pi),      rx(0.5 * pi),
          ry(0.5 * pi),                 rx(-0.5 * pi), ry(-0.5 * pi)};
}

// digitized value of a qubit bit: +1 for |0>, -1 for |1>
double bitval(std::uint32_t basis_index, int qubit) {
  return ((basis_index >> qubit) & 1u) ? -1.0 : 1.0;
}

// Three channel expectations under one pre-rotation.
struct ChannelMeans {
  double q1, q0, corr;
};

ChannelMeans exact_channel_means(const DensityMatrix& rho,
                                 const MeasurementModel& model,
                                 const Prerotation& pre) {
  const Eigen::Matrix4cd r = pre.combined();
  const Eigen::Matrix4cd rotated = r * rho.mat * r.adjoint();
  ChannelMeans out{};
  for (int ch = 0; ch < 3; ++ch) {
    const double m =
        (model.channel_operator(ch) * rotated).trace().real();
    (ch == kChannelQ1 ? out.q1 : ch == kChannelQ0 ? out.q0 : out.corr) = m;
  }
  return out;
}

}  // namespace

MeasurementModel MeasurementModel::ideal() {
  MeasurementModel m;
  m.betas.setZero();
  m.betas(kChannelQ1, 2) = 1.0;    // ZI
  m.betas(kChannelQ0, 1) = 1.0;    // IZ
  m.betas(kChannelCorr, 3) = 1.0;  // ZZ
  return m;
}

Eigen::Matrix4cd MeasurementModel::channel_operator(int channel) const {
  static const char* kLabels[4] = {"II", "IZ", "ZI", "ZZ"};
  Eigen::Matrix4cd op = Eigen::Matrix4cd::Zero();
  for (int j = 0; j < 4; ++j) {
    if (betas(channel, j) == 0.0) continue;
    op += betas(channel, j) * pauli_matrix(PauliLabel::from_string(kLabels[j]));
  }
  return op;
}

Eigen::Matrix4cd Prerotation::combined() const {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      m.block<2, 2>(2 * a, 2 * b) = r_q1(a, b) * r_q0;
  return m;
}

const std::array<Prerotation, kNumPrerotations>& prerotation_set() {
  static const std::array<Prerotation, kNumPrerotations> set = [] {
    const auto gates = single_qubit_rotations();
    std::array<Prerotation, kNumPrerotations> s;
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        s[6 * i + j] = {gates[i], gates[j]};
    return s;
  }();
  return set;
}

MeasurementModel calibrate_betas(const NoiseModel& noise, std::int64_t n_meas,
                                 std::uint64_t seed) {
  if (n_meas < 0)
    throw std::invalid_argument("calibrate_betas: negative n_meas");
  const bool with_residual = noise.level >= ErrorLevel::RESIDUAL;
  const double p1 = with_residual ? noise.q1.p_residual : 0.0;
  const double p0 = with_residual ? noise.q0.p_residual : 0.0;

  // Measured channel averages for the four nominal preparations
  // |00>, |01>, |10>, |11> (index = 2*bit_q1 + bit_q0).
  Eigen::Matrix4d averages;  // rows: prep state, cols: q1, q0, corr, unused
  averages.setZero();
  Rng rng(derive_seed(seed, 0xCA11B7A7E5ULL));
  const std::int64_t shots = 7 * n_meas;
  for (int k = 0; k < 4; ++k) {
    const int bit1 = (k >> 1) & 1;
    const int bit0 = k & 1;
    // probability that the digitized value reads +1 (qubit found in |0>)
    const double up1 = bit1 ? p1 : 1.0 - p1;
    const double up0 = bit0 ? p0 : 1.0 - p0;
    double a1, a0, ac;
    if (n_meas == 0) {
      a1 = 2.0 * up1 - 1.0;
      a0 = 2.0 * up0 - 1.0;
      ac = a1 * a0;  // independent qubits
    } else {
      double s1 = 0.0, s0 = 0.0, sc = 0.0;
      for (std::int64_t t = 0; t < shots; ++t) {
        const double b1 = rng.uniform() < up1 ? 1.0 : -1.0;
        const double b0 = rng.uniform() < up0 ? 1.0 : -1.0;
        s1 += b1;
        s0 += b0;
        sc += b1 * b0;
      }
      a1 = s1 / static_cast<double>(shots);
      a0 = s0 / static_cast<double>(shots);
      ac = sc / static_cast<double>(shots);
    }
    averages(k, 0) = a1;
    averages(k, 1) = a0;
    averages(k, 2) = ac;
  }

  // Residual-corrected expectations of (II, IZ, ZI, ZZ) in the prepared
  // states; solving against these keeps the betas free of preparation error.
  Eigen::Matrix4d design;
  for (int k = 0; k < 4; ++k) {
    const double z1 = ((k >> 1) & 1 ? -1.0 : 1.0) * (1.0 - 2.0 * p1);
    const double z0 = (k & 1 ? -1.0 : 1.0) * (1.0 - 2.0 * p0);
    design(k, 0) = 1.0;
    design(k, 1) = z0;        // IZ
    design(k, 2) = z1;        // ZI
    design(k, 3) = z1 * z0;   // ZZ
  }
  Eigen::JacobiSVD<Eigen::Matrix4d> svd(
      design, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const double cond_floor = 1e-9 * svd.singularValues()(0);
  if (svd.singularValues()(3) <= cond_floor)
    throw SingularCalibration(
        "calibrate_betas: calibration system ill-conditioned");

  MeasurementModel model;
  for (int ch = 0; ch < 3; ++ch)
    model.betas.row(ch) = svd.solve(averages.col(ch)).transpose();
  return model;
}

std::vector<TomographyRecord> measure_state(const DensityMatrix& rho,
                                            const MeasurementModel& model,
                                            std::int64_t n_meas,
                                            std::uint64_t seed) {
  if (n_meas < 0)
    throw std::invalid_argument("measure_state: negative n_meas");
  const auto& pres = prerotation_set();
  std::vector<TomographyRecord> records;
  records.reserve(kNumPrerotations);

  for (int k = 0; k < kNumPrerotations; ++k) {
    const ChannelMeans mu = exact_channel_means(rho, model, pres[k]);
    TomographyRecord rec;
    rec.prerotation_index = k;
    rec.n_meas = n_meas;
    if (n_meas == 0) {
      rec.m_q1 = mu.q1;
      rec.m_q0 = mu.q0;
      rec.m_corr = mu.corr;
    } else {
      // joint distribution of the digitized pair consistent with the three
      // channel means; equals the rotated computational-basis distribution
      // for the pure digitization model
      double p[4];
      double total = 0.0;
      for (int outcome = 0; outcome < 4; ++outcome) {
        const double b1 = bitval(outcome, 1);
        const double b0 = bitval(outcome, 0);
        p[outcome] = 0.25 * (1.0 + b1 * mu.q1 + b0 * mu.q0 + b1 * b0 * mu.corr);
        p[outcome] = std::max(p[outcome], 0.0);
        total += p[outcome];
      }
      for (double& v : p) v /= total;

      Rng rng(derive_seed(seed, 0x70360ULL, static_cast<std::uint64_t>(k)));
      std::int64_t counts[4] = {0, 0, 0, 0};
      for (std::int64_t t = 0; t < n_meas; ++t) {
        const double u = rng.uniform();
        if (u < p[0]) ++counts[0];
        else if (u < p[0] + p[1]) ++counts[1];
        else if (u < p[0] + p[1] + p[2]) ++counts[2];
        else ++counts[3];
      }
      double s1 = 0.0, s0 = 0.0, sc = 0.0;
      for (int outcome = 0; outcome < 4; ++outcome) {
        const double b1 = bitval(outcome, 1);
        const double b0 = bitval(outcome, 0);
        const double w = static_cast<double>(counts[outcome]);
        s1 += w * b1;
        s0 += w * b0;
        sc += w * b1 * b0;
      }
      const double inv = 1.0 / static_cast<double>(n_meas);
      rec.m_q1 = s1 * inv;
      rec.m_q0 = s0 * inv;
      rec.m_corr = sc * inv;
    }
    records.push_back(rec);
  }
  return records;
}

PauliVector linear_inversion(const std::vector<TomographyRecord>& records,
                             const MeasurementModel& model) {
  if (records.size() != kNumPrerotations)
    throw DimensionMismatch("linear_inversion: expected 36 records");
  const auto& pres = prerotation_set();

  // channel pre-scaling: pooled empirical shot-noise standard deviation
  double scale[3] = {1.0, 1.0, 1.0};
  const std::int64_t n_meas = records.front().n_meas;
  if (n_meas > 0) {
    for (int ch = 0; ch < 3; ++ch) {
      double pooled = 0.0;
      for (const auto& rec : records) {
        const double m = ch == kChannelQ1   ? rec.m_q1
                         : ch == kChannelQ0 ? rec.m_q0
                                            : rec.m_corr;
        // floor keeps deterministic outcomes from collapsing the scale
        pooled += std::max(1.0 - m * m, 1.0 / static_cast<double>(n_meas));
      }
      pooled /= static_cast<double>(records.size()) *
                static_cast<double>(n_meas);
      scale[ch] = 1.0 / std::sqrt(pooled);
    }
  }

  Eigen::MatrixXd a(3 * kNumPrerotations, 15);
  Eigen::VectorXd b(3 * kNumPrerotations);
  int row = 0;
  for (int ch = 0; ch < 3; ++ch) {
    const Eigen::Matrix4cd m_op = model.channel_operator(ch);
    for (const auto& rec : records) {
      const int k = rec.prerotation_index;
      if (k < 0 || k >= kNumPrerotations)
        throw DimensionMismatch("linear_inversion: bad prerotation index");
      const Eigen::Matrix4cd r = pres[k].combined();
      const Eigen::Matrix4cd effective = r.adjoint() * m_op * r;
      // Pauli expansion of the effective operator
      double c_identity = 0.0;
      for (int p = 0; p < 16; ++p) {
        const Complex t =
            (pauli_matrix(PauliLabel(2, p)) * effective).trace() * 0.25;
        if (p == 0)
          c_identity = t.real();
        else
          a(row, p - 1) = scale[ch] * t.real();
      }
      const double measured = ch == kChannelQ1   ? rec.m_q1
                              : ch == kChannelQ0 ? rec.m_q0
                                                 : rec.m_corr;
      b(row) = scale[ch] * (measured - c_identity);
      ++row;
    }
  }

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
  qr.setThreshold(1e-10);
  if (qr.rank() < 15)
    throw RankDeficient("linear_inversion: design matrix rank below 15");
  const Eigen::VectorXd x = qr.solve(b);

  PauliVector out = PauliVector::maximally_mixed(2);
  for (int p = 1; p < 16; ++p) out.coeffs[p] = x(p - 1);
  return out;
}

PauliVector gaussian_coefficient_sampling(const PauliVector& rho_sim,
                                          std::int64_t n_meas,
                                          std::uint64_t seed) {
  if (n_meas < 0)
    throw std::invalid_argument(
        "gaussian_coefficient_sampling: negative n_meas");
  if (n_meas == 0) return rho_sim;
  PauliVector out = rho_sim;
  Rng rng(derive_seed(seed, 0x6A055ULL));
  for (Eigen::Index p = 1; p < out.coeffs.size(); ++p) {
    const double c = rho_sim.coeffs[p];
    const double variance =
        std::max(0.0, (1.0 + c) * (1.0 - c)) / static_cast<double>(n_meas);
    out.coeffs[p] = c + rng.normal() * std::sqrt(variance);
  }
  return out;
}

}  // namespace svqe
