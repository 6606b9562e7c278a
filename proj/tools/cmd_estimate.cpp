// SPDX-FileCopyrightText: (c) 2026 the shiftrm authors
//
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <filesystem>
#include <map>
#include <sstream>

#include "commands.hpp"
#include "shiftrm/errors.hpp"
#include "shiftrm/ingest.hpp"
#include "shiftrm/nw.hpp"
#include "shiftrm/report.hpp"
#include "shiftrm/shape.hpp"
#include "shiftrm/sim.hpp"

namespace shiftrm::cli {

int cmd_estimate(const EstimateOptions& options) {
  RMConfig rm;
  rm.mode = rm_mode_from_name(options.mode);
  rm.f1_sign = options.f1_sign;
  rm.gamma0 = options.gamma0;
  rm.exponent = options.exponent;
  rm.projection_radius = options.projection_radius;
  rm.theta0 = options.theta0;
  switch (rm.mode) {
    case RMMode::kSymmetricSign:
      if (options.f1) rm.known_f1 = std::abs(*options.f1);
      break;
    case RMMode::kEfficientKnownF1:
      if (!options.f1) throw ConfigError("estimate: mode 'known' requires --f1");
      rm.f1 = *options.f1;
      break;
    case RMMode::kNonsymmetric:
      if (!options.f1 && !options.g1)
        throw ConfigError("estimate: mode 'nonsym' requires --f1 and/or --g1");
      rm.f1 = options.f1.value_or(0.0);
      rm.g1 = options.g1.value_or(0.0);
      break;
    case RMMode::kEfficientAdaptive:
      break;
  }
  validate_rm_config(rm);

  IngestSpec ingest;
  ingest.path = options.input_path;
  ingest.x_col = options.x_col;
  ingest.y_col = options.y_col;
  ingest.period = options.period;
  ingest.x_period = options.x_period;
  ingest.density_file = options.density_file;
  const IngestResult data = load_observations(ingest);

  const KernelSpec kernel = kernel_by_name(options.kernel);
  RMState state = make_rm_state(rm);
  std::optional<NWState> nw;
  if (options.curve) nw = make_nw_state(symmetric_grid(options.grid_points), options.alpha);

  RunReport report;
  TraceThinner thinner;
  for (const Observation& obs : data.rows) {
    const double theta_prev = state.theta_hat;
    const double gx = density_value(data.density, obs.x);
    state = rm_step(rm, state, obs.x, obs.y, gx);
    if (nw) nw_update(*nw, kernel, obs.x, obs.y, theta_prev);
    if (thinner.due(state.n)) report.theta_trace.push_back({state.n, state.theta_hat});
  }
  if (report.theta_trace.empty() || report.theta_trace.back().n != state.n)
    report.theta_trace.push_back({state.n, state.theta_hat});

  report.scenario_name = "estimate";
  report.final_theta_hat = state.theta_hat;
  report.projection_count = state.projection_count;
  report.rm_state = state;
  try {
    const double v = variance_estimate(state, rm);
    report.ci = confidence_interval(state, v, options.level);
  } catch (const Error&) {
    report.ci.reset();
  }
  report.diagnostics["n_total"] = static_cast<double>(state.n);
  if (state.n >= 1)
    report.diagnostics["t2_second_moment"] = state.sum_t2 / static_cast<double>(state.n);

  if (nw) {
    // Bands need the noise level; without --sigma2 the curve ships without
    // them.
    std::vector<ConfidenceInterval> band;
    if (options.sigma2) {
      ModelSpec band_model;
      band_model.f = zero_shape();
      band_model.g = data.density;
      band_model.sigma2 = *options.sigma2;
      band = nw_confidence_band(*nw, band_model, kernel, state.theta_hat, options.level);
    }
    report.curve.resize(nw->grid.size());
    for (std::size_t j = 0; j < nw->grid.size(); ++j) {
      CurvePoint& p = report.curve[j];
      p.x = nw->grid[j];
      if (nw->den[j] > 0.0) {
        p.defined = true;
        p.f_hat = nw->num[j] / nw->den[j];
        if (!band.empty() && std::isfinite(band[j].lower)) {
          p.has_band = true;
          p.ci_lower = band[j].lower;
          p.ci_upper = band[j].upper;
        }
      }
    }
  }

  std::map<std::string, std::string> echo;
  echo["command"] = "estimate";
  echo["input"] = options.input_path;
  echo["mode"] = options.mode;
  echo["kernel"] = options.kernel;
  {
    std::ostringstream v;
    v << options.alpha;
    echo["alpha"] = v.str();
  }

  namespace fs = std::filesystem;
  fs::create_directories(options.output_dir);
  const fs::path out(options.output_dir);
  write_text_file((out / "report.json").string(), report_to_json_string(report, echo) + "\n");
  write_trace_csv((out / "theta_trace.csv").string(), "theta_hat", report.theta_trace);
  if (!report.curve.empty()) write_curve_csv((out / "curve.csv").string(), report.curve);
  return 0;
}

}  // namespace shiftrm::cli
