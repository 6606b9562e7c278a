// SPDX-FileCopyrightText: (c) 2026 the shiftrm authors
//
// SPDX-License-Identifier: Apache-2.0
//
// Recursive shift-and-shape estimation for noisy periodic signals.
//
// Exit codes: 0 success, 2 configuration error (bad flags, bad config file,
// invalid parameter combination), 3 runtime error (unreadable or malformed
// data, numeric failure).

#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "shiftrm/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"recursive shift estimation for periodic signals in noise"};
  app.require_subcommand(1);

  shiftrm::cli::SimulateOptions sim;
  CLI::App* simulate = app.add_subcommand("simulate", "run a configured simulation scenario");
  simulate->add_option("--config", sim.config_path, "scenario config file")->required();
  simulate->add_option("--output", sim.output_dir, "output directory (default: out)");
  simulate->add_option("--seed", sim.seed, "override the scenario seed");
  simulate->add_option("--jobs", sim.jobs, "worker threads for replicates")
      ->check(CLI::PositiveNumber);

  shiftrm::cli::EstimateOptions est;
  CLI::App* estimate = app.add_subcommand("estimate", "estimate shift and shape from a CSV");
  estimate->add_option("--input", est.input_path, "observation CSV")->required();
  estimate->add_option("--output", est.output_dir, "output directory (default: out)");
  estimate->add_option("--mode", est.mode, "step variant: sign|known|adaptive|nonsym");
  estimate->add_option("--f1-sign", est.f1_sign, "sign of f1 for sign/adaptive modes")
      ->check(CLI::IsMember({1, -1}));
  estimate->add_option("--f1", est.f1, "first cosine Fourier coefficient of the shape");
  estimate->add_option("--g1", est.g1, "first sine Fourier coefficient of the shape");
  estimate->add_option("--sigma2", est.sigma2, "noise variance (enables curve bands)");
  estimate->add_option("--gamma0", est.gamma0, "gain constant");
  estimate->add_option("--exponent", est.exponent, "gain exponent in (1/2, 1]");
  estimate->add_option("--radius", est.projection_radius, "projection radius");
  estimate->add_option("--theta0", est.theta0, "starting point");
  estimate->add_option("--x-col", est.x_col, "x column index (default 0)");
  estimate->add_option("--y-col", est.y_col, "y column index (default 1)");
  estimate->add_option("--period", est.period,
                       "raw-signal mode: samples per period, x from the row index");
  estimate->add_option("--x-period", est.x_period, "wrap raw x values with this period");
  estimate->add_option("--density", est.density_file, "tabulated design density CSV");
  estimate->add_flag("!--no-curve", est.curve, "skip the curve estimate");
  estimate->add_option("--grid-points", est.grid_points, "curve grid size (default 101)");
  estimate->add_option("--alpha", est.alpha, "curve bandwidth exponent (default 0.9)");
  estimate->add_option("--kernel", est.kernel, "uniform|epanechnikov");
  estimate->add_option("--level", est.level, "confidence level (default 0.95)");

  shiftrm::cli::OracleOptions ora;
  CLI::App* oracle = app.add_subcommand("oracle", "print closed-form reference values");
  oracle->add_option("--fn", ora.fn, "phi|phi-quad|Phi|varphi|Psi|xi2|xi2-eff|nw-var")
      ->required();
  oracle->add_option("--model", ora.model, "experiment1|experiment2");
  oracle->add_option("--theta", ora.theta, "true shift (default 0.1)");
  oracle->add_option("--sigma2", ora.sigma2, "noise variance");
  oracle->add_option("--p", ora.shape_p, "harmonics in the experiment1 shape (default 8)");
  oracle->add_option("--t", ora.t, "single evaluation point for t-functions");
  oracle->add_option("--x", ora.x, "single evaluation point for nw-var");
  oracle->add_option("--grid-min", ora.grid_min, "grid start (default -0.5)");
  oracle->add_option("--grid-max", ora.grid_max, "grid end (default 0.5)");
  oracle->add_option("--grid-count", ora.grid_count, "grid size (default 101)");
  oracle->add_option("--alpha", ora.alpha, "bandwidth exponent for nw-var (default 0.9)");
  oracle->add_option("--kernel", ora.kernel, "uniform|epanechnikov");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (simulate->parsed()) return shiftrm::cli::cmd_simulate(sim);
    if (estimate->parsed()) return shiftrm::cli::cmd_estimate(est);
    return shiftrm::cli::cmd_oracle(ora);
  } catch (const shiftrm::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
