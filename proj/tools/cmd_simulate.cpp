// SPDX-FileCopyrightText: (c) 2026 the shiftrm authors
//
// SPDX-License-Identifier: Apache-2.0

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "commands.hpp"
#include "shiftrm/config.hpp"
#include "shiftrm/report.hpp"
#include "shiftrm/sim.hpp"
#include "shiftrm/stats.hpp"

namespace shiftrm::cli {
namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

int cmd_simulate(const SimulateOptions& options) {
  ScenarioConfig config = parse_scenario_file(options.config_path);
  if (options.seed) config.seed = *options.seed;

  const std::vector<RunReport> reports = run_replicates(config, options.jobs);
  RunReport lead = reports.front();

  if (reports.size() > 1) {
    // Cross-replicate summaries ride along in the lead report.
    std::vector<double> finals, deltas;
    int covered = 0, with_known = 0;
    for (const RunReport& r : reports) {
      finals.push_back(r.final_theta_hat);
      if (r.delta_hat) deltas.push_back(*r.delta_hat);
      if (r.ci_known && r.rm_state.true_theta) {
        ++with_known;
        if (r.ci_known->lower <= *r.rm_state.true_theta &&
            *r.rm_state.true_theta <= r.ci_known->upper)
          ++covered;
      }
    }
    lead.diagnostics["replicates"] = static_cast<double>(reports.size());
    lead.diagnostics["final_mean"] = mean(finals);
    if (finals.size() >= 2) lead.diagnostics["final_variance"] = sample_variance(finals);
    if (with_known > 0)
      lead.diagnostics["coverage_known"] =
          static_cast<double>(covered) / static_cast<double>(with_known);
    if (!deltas.empty()) lead.diagnostics["delta_mean"] = mean(deltas);
  }

  namespace fs = std::filesystem;
  fs::create_directories(options.output_dir);
  const fs::path out(options.output_dir);

  write_text_file((out / "report.json").string(), report_to_json_string(lead, config) + "\n");
  write_trace_csv((out / "theta_trace.csv").string(), "theta_hat", lead.theta_trace);
  if (!lead.qsl_trace.empty())
    write_trace_csv((out / "qsl_trace.csv").string(), "qsl", lead.qsl_trace);
  if (!lead.curve.empty()) write_curve_csv((out / "curve.csv").string(), lead.curve);

  if (reports.size() > 1) {
    std::ostringstream rows;
    rows << "replicate,final_theta_hat,delta_hat\n";
    for (std::size_t r = 0; r < reports.size(); ++r) {
      rows << r << "," << fmt(reports[r].final_theta_hat) << ",";
      if (reports[r].delta_hat) rows << fmt(*reports[r].delta_hat);
      rows << "\n";
    }
    write_text_file((out / "replicates.csv").string(), rows.str());
  }
  return 0;
}

}  // namespace shiftrm::cli
