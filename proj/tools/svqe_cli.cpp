// Copyright (c) 2026 The svqe developers
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: runs the simulated experiments from a JSON config
// and writes analysis-ready CSV/JSON into the output directory.

#include <cstdint>
#include <functional>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "svqe/cli.hpp"
#include "svqe/errors.hpp"

namespace {

struct CommonArgs {
  std::string config_path;
  std::string out_dir;
  std::int64_t seed = -1;
  int jobs = 0;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config_path, "JSON experiment config")
      ->required();
  cmd->add_option("--out", args.out_dir, "output directory (overrides config)");
  cmd->add_option("--seed", args.seed, "global seed (overrides config)");
  cmd->add_option("--jobs", args.jobs, "worker threads (overrides config)");
}

int run(const CommonArgs& args,
        const std::function<int(const svqe::ExperimentConfig&)>& command) {
  svqe::ExperimentConfig cfg;
  try {
    cfg = svqe::load_experiment_config(args.config_path);
    if (!args.out_dir.empty()) cfg.output_dir = args.out_dir;
    if (args.seed >= 0) cfg.seed = static_cast<std::uint64_t>(args.seed);
    if (args.jobs > 0) cfg.jobs = args.jobs;
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }
  try {
    return command(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"density-matrix VQE simulator with symmetry-verification "
               "post-processing"};
  app.require_subcommand(1);

  CommonArgs landscape_args, vqe_args, budget_args, positivity_args,
      negativity_args;

  auto* landscape =
      app.add_subcommand("landscape", "energy landscape E(theta, R)");
  add_common(landscape, landscape_args);

  auto* vqe = app.add_subcommand(
      "vqe", "closed-loop optimization across the bond-distance grid");
  add_common(vqe, vqe_args);

  auto* budget = app.add_subcommand(
      "error-budget", "per-mechanism error dissection at converged angles");
  add_common(budget, budget_args);

  auto* positivity = app.add_subcommand(
      "positivity",
      "relative-improvement scatter with and without positivity projection");
  add_common(positivity, positivity_args);

  auto* negativity = app.add_subcommand(
      "negativity", "reconstruction minimum eigenvalue versus shot count");
  add_common(negativity, negativity_args);

  CLI11_PARSE(app, argc, argv);

  if (landscape->parsed()) return run(landscape_args, svqe::cmd_landscape);
  if (vqe->parsed()) return run(vqe_args, svqe::cmd_vqe);
  if (budget->parsed()) return run(budget_args, svqe::cmd_error_budget);
  if (positivity->parsed()) return run(positivity_args, svqe::cmd_positivity);
  if (negativity->parsed()) return run(negativity_args, svqe::cmd_negativity);
  return 2;
}
