// Copyright (c) 2026 The svqe developers
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <numbers>

#include "svqe/channels.hpp"
#include "svqe/positivity.hpp"
#include "svqe/rng.hpp"
#include "svqe/simulator.hpp"
#include "svqe/symmetry.hpp"
#include "svqe/tomography.hpp"
#include "svqe/vqe.hpp"

namespace {

svqe::NoiseModel device_noise(
    svqe::ErrorLevel level = svqe::ErrorLevel::GATE_DEPHASING) {
  svqe::NoiseModel m;
  m.q1 = {9.8, 9.0, 0.0134};
  m.q0 = {11.7, 17.3, 0.0025};
  m.t2_star_red_us = 0.995;
  m.t_int_us = 0.0005;
  m.level = level;
  return m;
}

svqe::Hamiltonian equilibrium_row() {
  const auto table =
      svqe::load_coefficients(std::string(SVQE_DATA_DIR) + "/h2_sto3g.csv");
  return table[5];
}

void BM_PrepareAnsatz(benchmark::State& state) {
  const svqe::NoiseModel noise =
      device_noise(static_cast<svqe::ErrorLevel>(state.range(0)));
  double theta = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(svqe::prepare_ansatz_vector(theta, noise));
    theta += 1e-3;
  }
}
BENCHMARK(BM_PrepareAnsatz)->DenseRange(0, 4);

void BM_FluxAveragedPtm(benchmark::State& state) {
  double theta = 0.7;
  for (auto _ : state) {
    benchmark::DoNotOptimize(svqe::flux_averaged_ptm(theta, 0.1));
    theta += 1e-3;
  }
}
BENCHMARK(BM_FluxAveragedPtm);

void BM_MeasureAndInvert(benchmark::State& state) {
  const svqe::DensityMatrix rho = svqe::prepare_ansatz(0.9, device_noise());
  const svqe::MeasurementModel model = svqe::MeasurementModel::ideal();
  const std::int64_t n_meas = state.range(0);
  std::uint64_t seed = 1;
  for (auto _ : state) {
    const auto records = svqe::measure_state(rho, model, n_meas, seed++);
    benchmark::DoNotOptimize(svqe::linear_inversion(records, model));
  }
  state.SetItemsProcessed(state.iterations() * n_meas * 36);
}
BENCHMARK(BM_MeasureAndInvert)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_SymmetryVerify(benchmark::State& state) {
  svqe::PauliVector vec = svqe::prepare_ansatz_vector(0.9, device_noise());
  for (auto _ : state)
    benchmark::DoNotOptimize(
        svqe::symmetry_verify(vec, svqe::SymmetrySpec::zz_odd()));
}
BENCHMARK(BM_SymmetryVerify);

void BM_ProjectPhysical(benchmark::State& state) {
  svqe::PauliVector vec = svqe::prepare_ansatz_vector(0.9, device_noise());
  vec = svqe::gaussian_coefficient_sampling(vec, 1000, 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(svqe::project_physical(vec));
}
BENCHMARK(BM_ProjectPhysical);

void BM_OptimizeVqe(benchmark::State& state) {
  const svqe::Hamiltonian h = equilibrium_row();
  const svqe::NoiseModel noise = device_noise();
  std::uint64_t seed = 0;
  for (auto _ : state) {
    svqe::OptimizerConfig cfg;
    cfg.seed = seed++;
    cfg.n_meas_final = 10000;
    benchmark::DoNotOptimize(svqe::optimize(h, noise, cfg));
  }
}
BENCHMARK(BM_OptimizeVqe)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
