// SPDX-FileCopyrightText: (c) 2026 the shiftrm authors
//
// SPDX-License-Identifier: Apache-2.0

#include "shiftrm/sim.hpp"

#include <atomic>
#include <cmath>
#include <cstddef>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "shiftrm/errors.hpp"
#include "shiftrm/stats.hpp"

namespace shiftrm {
namespace {

// Known asymptotic variance of sqrt(n)(theta_hat - theta) for the step mode,
// evaluated on a model with the given true shift.
double known_variance(const ScenarioConfig& config, double theta) {
  ModelSpec model = config.model;
  model.theta = theta;
  if (config.rm.mode == RMMode::kEfficientKnownF1 ||
      config.rm.mode == RMMode::kEfficientAdaptive)
    return xi_squared_efficient(model);
  return xi_squared(model);
}

void record_traces(RunReport* report, TraceThinner* thinner, const RMState& state,
                   std::int64_t global_step, bool force = false) {
  if (!force && !thinner->due(global_step)) return;
  if (!report->theta_trace.empty() && report->theta_trace.back().n == global_step) return;
  report->theta_trace.push_back({global_step, state.theta_hat});
  if (state.true_theta && state.n >= 2) {
    report->qsl_trace.push_back(
        {global_step, state.sum_sq_dev / std::log(static_cast<double>(state.n))});
  }
}

void attach_curve(RunReport* report, const ScenarioConfig& config, const NWState& nw,
                  const KernelSpec& kernel) {
  std::vector<ConfidenceInterval> band;
  try {
    band = nw_confidence_band(nw, config.model, kernel, report->final_theta_hat,
                              config.ci_level);
  } catch (const Error&) {
    band.clear();
  }
  report->curve.resize(nw.grid.size());
  for (std::size_t j = 0; j < nw.grid.size(); ++j) {
    CurvePoint& p = report->curve[j];
    p.x = nw.grid[j];
    if (nw.den[j] > 0.0) {
      p.defined = true;
      p.f_hat = nw.num[j] / nw.den[j];
      if (!band.empty() && std::isfinite(band[j].lower)) {
        p.has_band = true;
        p.ci_lower = band[j].lower;
        p.ci_upper = band[j].upper;
      }
    }
  }
}

void finalize_report(RunReport* report, const ScenarioConfig& config, const RMState& state,
                     double final_true_theta) {
  report->scenario_name = config.name;
  report->final_theta_hat = state.theta_hat;
  report->projection_count = state.projection_count;
  report->rm_state = state;

  try {
    const double v = variance_estimate(state, config.rm);
    report->ci = confidence_interval(state, v, config.ci_level);
  } catch (const Error&) {
    report->ci.reset();
  }
  try {
    const double xi2 = known_variance(config, final_true_theta);
    report->ci_known = confidence_interval(state, xi2, config.ci_level);
    report->diagnostics["xi_squared_known"] = xi2;
  } catch (const Error&) {
    report->ci_known.reset();
  }

  report->diagnostics["n_final_regime"] = static_cast<double>(state.n);
  if (state.n >= 1)
    report->diagnostics["t2_second_moment"] = state.sum_t2 / static_cast<double>(state.n);
  if (state.true_theta && state.n >= 2)
    report->diagnostics["qsl_final"] =
        state.sum_sq_dev / std::log(static_cast<double>(state.n));
  if (config.rm.mode == RMMode::kEfficientAdaptive) {
    report->diagnostics["f1_hat"] = state.f1_hat;
    report->diagnostics["sign_frozen"] = state.sign_frozen ? *state.sign_frozen : 0.0;
  }
}

// Clamped worker-pool parallel loop; index order of results is fixed, so
// job count never changes any output.
template <typename Fn>
void parallel_for(int jobs, int count, Fn&& fn) {
  jobs = std::max(1, std::min(jobs, count));
  if (jobs <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(jobs));
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace

void validate_scenario(const ScenarioConfig& config) {
  if (!config.model.f.evaluator) throw ConfigError("scenario: model shape missing");
  if (!config.model.g.evaluator || !config.model.g.inverse_cdf)
    throw ConfigError("scenario: model density missing");
  if (!(config.model.sigma2 >= 0.0)) throw ConfigError("scenario: sigma2 must be >= 0");
  if (config.n_per_curve < 1) throw ConfigError("scenario: n_per_curve must be >= 1");
  if (config.n_curves < 1) throw ConfigError("scenario: n_curves must be >= 1");
  if (config.replicates < 1) throw ConfigError("scenario: replicates must be >= 1");
  if (!(config.ci_level > 0.0 && config.ci_level < 1.0))
    throw ConfigError("scenario: level must lie in (0, 1)");
  validate_rm_config(config.rm);
  if (!(std::abs(config.model.theta) < 0.25) ||
      !(std::abs(config.model.theta) <= config.rm.projection_radius))
    throw ConfigError("scenario: model theta outside the projection interval");
  if (config.nw.enabled) {
    if (config.nw.grid_points < 2) throw ConfigError("scenario: nw grid_points must be >= 2");
    if (!(config.nw.alpha > 0.0 && config.nw.alpha < 1.0))
      throw ConfigError("scenario: nw alpha must lie in (0, 1)");
    kernel_by_name(config.nw.kernel);
  }
  for (std::size_t i = 0; i < config.regime_breaks.size(); ++i) {
    const RegimeBreak& rb = config.regime_breaks[i];
    if (i == 0 && rb.start_curve != 0)
      throw ConfigError("scenario: first regime break must start at curve 0");
    if (i > 0 && rb.start_curve <= config.regime_breaks[i - 1].start_curve)
      throw ConfigError("scenario: regime break curves must be strictly increasing");
    if (rb.start_curve >= config.n_curves)
      throw ConfigError("scenario: regime break beyond the last curve");
    if (!(std::abs(rb.theta) < 0.25) || !(std::abs(rb.theta) <= config.rm.projection_radius))
      throw ConfigError("scenario: regime theta outside the projection interval");
  }
}

Observation generate_observation(const ModelSpec& model, Rng& rng) {
  Observation obs;
  obs.x = model.g.inverse_cdf(rng.uniform01());
  const double noise = std::sqrt(model.sigma2) * rng.normal();
  obs.y = model.f.evaluator(obs.x - model.theta) + noise;
  return obs;
}

RunReport run_experiment_single(const ScenarioConfig& config, int replicate) {
  validate_scenario(config);
  if (!config.regime_breaks.empty())
    throw ConfigError("run_experiment_single: scenario has regime breaks");

  Rng rng(config.seed, static_cast<std::uint64_t>(replicate));
  RMState state = make_rm_state(config.rm, config.model.theta);
  const KernelSpec kernel = kernel_by_name(config.nw.kernel);
  std::optional<NWState> nw;
  if (config.nw.enabled)
    nw = make_nw_state(symmetric_grid(config.nw.grid_points), config.nw.alpha);

  RunReport report;
  TraceThinner thinner;
  const std::int64_t total = config.n_per_curve * config.n_curves;
  for (std::int64_t i = 0; i < total; ++i) {
    const Observation obs = generate_observation(config.model, rng);
    const double theta_prev = state.theta_hat;
    const double gx = density_value(config.model.g, obs.x);
    state = rm_step(config.rm, state, obs.x, obs.y, gx);
    if (nw) nw_update(*nw, kernel, obs.x, obs.y, theta_prev);
    record_traces(&report, &thinner, state, state.n);
  }
  record_traces(&report, &thinner, state, state.n, /*force=*/true);

  finalize_report(&report, config, state, config.model.theta);
  if (nw) attach_curve(&report, config, *nw, kernel);
  return report;
}

RunReport run_experiment_change(const ScenarioConfig& config, int replicate) {
  validate_scenario(config);
  if (config.regime_breaks.empty())
    throw ConfigError("run_experiment_change: scenario has no regime breaks");

  Rng rng(config.seed, static_cast<std::uint64_t>(replicate));
  const KernelSpec kernel = kernel_by_name(config.nw.kernel);
  std::optional<NWState> nw;
  if (config.nw.enabled)
    nw = make_nw_state(symmetric_grid(config.nw.grid_points), config.nw.alpha);

  ModelSpec model = config.model;
  model.theta = config.regime_breaks.front().theta;
  RMState state = make_rm_state(config.rm, model.theta);

  RunReport report;
  TraceThinner thinner;
  std::vector<std::vector<double>> regime_finals(config.regime_breaks.size());
  std::size_t regime = 0;
  std::int64_t global_step = 0;

  for (int curve = 0; curve < config.n_curves; ++curve) {
    if (regime + 1 < config.regime_breaks.size() &&
        curve == config.regime_breaks[regime + 1].start_curve) {
      ++regime;
      model.theta = config.regime_breaks[regime].theta;
      if (config.cumulative_regimes) {
        state.true_theta = model.theta;
      } else {
        state = make_rm_state(config.rm, model.theta);
      }
    }
    for (std::int64_t i = 0; i < config.n_per_curve; ++i) {
      const Observation obs = generate_observation(model, rng);
      const double theta_prev = state.theta_hat;
      const double gx = density_value(model.g, obs.x);
      state = rm_step(config.rm, state, obs.x, obs.y, gx);
      if (nw) nw_update(*nw, kernel, obs.x, obs.y, theta_prev);
      ++global_step;
      record_traces(&report, &thinner, state, global_step);
    }
    regime_finals[regime].push_back(state.theta_hat);
  }
  record_traces(&report, &thinner, state, global_step, /*force=*/true);

  finalize_report(&report, config, state, model.theta);
  if (nw) attach_curve(&report, config, *nw, kernel);

  report.first_regime_estimates = regime_finals.front();
  report.last_regime_estimates = regime_finals.back();
  report.delta_hat =
      mean(report.last_regime_estimates) - mean(report.first_regime_estimates);
  report.diagnostics["delta_hat"] = *report.delta_hat;
  return report;
}

RunReport run_scenario(const ScenarioConfig& config, int replicate) {
  return config.regime_breaks.empty() ? run_experiment_single(config, replicate)
                                      : run_experiment_change(config, replicate);
}

std::vector<RunReport> run_replicates(const ScenarioConfig& config, int jobs) {
  validate_scenario(config);
  std::vector<RunReport> reports(static_cast<std::size_t>(config.replicates));
  parallel_for(jobs, config.replicates,
               [&](int r) { reports[static_cast<std::size_t>(r)] = run_scenario(config, r); });
  return reports;
}

CltDiagnostics clt_diagnostic(const ScenarioConfig& config, int jobs) {
  validate_scenario(config);
  if (!config.regime_breaks.empty())
    throw ConfigError("clt_diagnostic: single-regime scenarios only");
  if (config.replicates < 2) throw ConfigError("clt_diagnostic: needs at least two replicates");

  const double theta = config.model.theta;
  const double xi2 = known_variance(config, theta);
  const double xi = std::sqrt(xi2);
  const std::int64_t total = config.n_per_curve * config.n_curves;
  const double sqrt_n = std::sqrt(static_cast<double>(total));
  const KernelSpec kernel = kernel_by_name(config.nw.kernel);

  const std::size_t grid_size =
      config.nw.enabled ? static_cast<std::size_t>(config.nw.grid_points) : 0;
  std::vector<double> z(static_cast<std::size_t>(config.replicates));
  std::vector<std::vector<double>> curve_z(grid_size);
  for (auto& col : curve_z) col.resize(static_cast<std::size_t>(config.replicates));
  std::vector<std::uint8_t> curve_ok(grid_size, 1);
  std::mutex ok_mutex;

  parallel_for(jobs, config.replicates, [&](int r) {
    Rng rng(config.seed, static_cast<std::uint64_t>(r));
    RMState state = make_rm_state(config.rm, theta);
    std::optional<NWState> nw;
    if (config.nw.enabled)
      nw = make_nw_state(symmetric_grid(config.nw.grid_points), config.nw.alpha);
    for (std::int64_t i = 0; i < total; ++i) {
      const Observation obs = generate_observation(config.model, rng);
      const double theta_prev = state.theta_hat;
      const double gx = density_value(config.model.g, obs.x);
      state = rm_step(config.rm, state, obs.x, obs.y, gx);
      if (nw) nw_update(*nw, kernel, obs.x, obs.y, theta_prev);
    }
    z[static_cast<std::size_t>(r)] = sqrt_n * (state.theta_hat - theta) / xi;
    if (nw) {
      const double sqrt_neff =
          std::sqrt(std::pow(static_cast<double>(total), 1.0 - config.nw.alpha));
      for (std::size_t j = 0; j < grid_size; ++j) {
        if (nw->den[j] <= 0.0) {
          std::lock_guard<std::mutex> lock(ok_mutex);
          curve_ok[j] = 0;
          continue;
        }
        const double f_hat = nw->num[j] / nw->den[j];
        const double f_true = config.model.f.evaluator(nw->grid[j]);
        const double v2 =
            nw_asymptotic_variance(config.model, nw->grid[j], config.nw.alpha, kernel.nu2);
        curve_z[j][static_cast<std::size_t>(r)] = sqrt_neff * (f_hat - f_true) / std::sqrt(v2);
      }
    }
  });

  CltDiagnostics diag;
  diag.target_variance = xi2;
  diag.std_errors = z;
  diag.z_mean = mean(z);
  diag.z_variance = sample_variance(z);
  diag.ks_distance = ks_distance_to_standard_normal(z);
  diag.curve_z_variance.resize(grid_size);
  for (std::size_t j = 0; j < grid_size; ++j) {
    diag.curve_z_variance[j] = curve_ok[j]
                                   ? sample_variance(curve_z[j])
                                   : std::numeric_limits<double>::quiet_NaN();
  }
  return diag;
}

}  // namespace shiftrm
