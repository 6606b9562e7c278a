// SPDX-FileCopyrightText: (c) 2026 the shiftrm authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace shiftrm::cli {

struct SimulateOptions {
  std::string config_path;
  std::string output_dir = "out";
  std::optional<std::uint64_t> seed;
  int jobs = 1;
};

struct EstimateOptions {
  std::string input_path;
  std::string output_dir = "out";
  std::string mode = "sign";
  int f1_sign = +1;
  std::optional<double> f1;
  std::optional<double> g1;
  std::optional<double> sigma2;
  double gamma0 = 1.0;
  double exponent = 1.0;
  double projection_radius = 0.25;
  double theta0 = 0.0;
  int x_col = 0;
  int y_col = 1;
  std::optional<std::int64_t> period;
  std::optional<double> x_period;
  std::optional<std::string> density_file;
  bool curve = true;
  int grid_points = 101;
  double alpha = 0.9;
  std::string kernel = "uniform";
  double level = 0.95;
};

struct OracleOptions {
  std::string fn = "xi2";
  std::string model = "experiment1";
  std::optional<double> theta;
  std::optional<double> sigma2;
  int shape_p = 8;
  std::optional<double> t;
  std::optional<double> x;
  double grid_min = -0.5;
  double grid_max = 0.5;
  int grid_count = 101;
  double alpha = 0.9;
  std::string kernel = "uniform";
};

int cmd_simulate(const SimulateOptions& options);
int cmd_estimate(const EstimateOptions& options);
int cmd_oracle(const OracleOptions& options);

}  // namespace shiftrm::cli
