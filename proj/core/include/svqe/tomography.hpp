// Copyright (c) 2026 The svqe developers
// SPDX-License-Identifier: Apache-2.0

#ifndef SVQE_TOMOGRAPHY_HPP
#define SVQE_TOMOGRAPHY_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "svqe/noise.hpp"
#include "svqe/pauli.hpp"

namespace svqe {

inline constexpr int kNumPrerotations = 36;

/// Measurement channels: Q1 average, Q0 average, and the shot-to-shot
/// correlation of the two digitized bits.
enum Channel : int { kChannelQ1 = 0, kChannelQ0 = 1, kChannelCorr = 2 };

/// Calibrated measurement operators M_i = sum_j beta_j^i P_j over the
/// diagonal two-qubit Paulis, one operator per channel.
struct MeasurementModel {
  /// rows: channel (q1, q0, correlation); columns: II, IZ, ZI, ZZ.
  Eigen::Matrix<double, 3, 4> betas;

  /// Pure +-1 digitization: M_q1 = ZI, M_q0 = IZ, M_corr = ZZ.
  static MeasurementModel ideal();

  Eigen::Matrix4cd channel_operator(int channel) const;
};

/// Averages of the three channels for one pre-rotation setting.
/// n_meas == 0 marks an exact (infinite-shot) record.
struct TomographyRecord {
  int prerotation_index = 0;
  double m_q1 = 0.0;
  double m_q0 = 0.0;
  double m_corr = 0.0;
  std::int64_t n_meas = 0;
};

/// One simultaneous pre-rotation pair.
struct Prerotation {
  Eigen::Matrix2cd r_q1;
  Eigen::Matrix2cd r_q0;
  Eigen::Matrix4cd combined() const;  // kron(r_q1, r_q0)
};

/// The overcomplete set of 36 pre-rotation pairs, each factor drawn from
/// {I, Xpi, Xpi/2, Ypi/2, X-pi/2, Y-pi/2}, row-major with the Q1 factor as
/// the major index.
const std::array<Prerotation, kNumPrerotations>& prerotation_set();

/// Simulates the computational-state calibration: prepares the four basis
/// states under the model's residual excitation, measures each channel with
/// 7*n_meas shots per state, and solves the 4x4 linear system with the
/// residual-corrected state expectations, so that the extracted operators
/// are not corrupted by preparation error. n_meas == 0 uses exact averages.
MeasurementModel calibrate_betas(const NoiseModel& noise, std::int64_t n_meas,
                                 std::uint64_t seed);

/// Samples n_meas digitized outcome pairs per pre-rotation from the rotated
/// state and averages the three channels (correlation is the per-shot bit
/// product). n_meas == 0 returns exact expectation values.
std::vector<TomographyRecord> measure_state(const DensityMatrix& rho,
                                            const MeasurementModel& model,
                                            std::int64_t n_meas,
                                            std::uint64_t seed);

/// Least-squares linear inversion of the 108-equation system for the 15
/// nontrivial Pauli coefficients (the identity is forced to 1). Channels
/// are pre-scaled by their pooled empirical shot-noise deviation.
PauliVector linear_inversion(const std::vector<TomographyRecord>& records,
                             const MeasurementModel& model);

/// Fast sampling-noise path: adds zero-mean Gaussian noise of variance
/// (1+rho_P)(1-rho_P)/n_meas to each nontrivial coefficient. n_meas == 0
/// (infinite shots) returns the input unchanged.
PauliVector gaussian_coefficient_sampling(const PauliVector& rho_sim,
                                          std::int64_t n_meas,
                                          std::uint64_t seed);

}  // namespace svqe

#endif  // SVQE_TOMOGRAPHY_HPP
