// SPDX-FileCopyrightText: (c) 2026 the shiftrm authors
//
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "shiftrm/model.hpp"
#include "shiftrm/nw.hpp"
#include "shiftrm/rm.hpp"
#include "shiftrm/rng.hpp"
#include "shiftrm/sim.hpp"

namespace {

using namespace shiftrm;

RMConfig bench_rm_config() {
  RMConfig rm;
  rm.mode = RMMode::kSymmetricSign;
  rm.known_f1 = 0.5;
  return rm;
}

void BM_RmStep(benchmark::State& state) {
  const ModelSpec model = experiment1_model();
  const RMConfig rm = bench_rm_config();
  Rng rng(1);
  RMState s = make_rm_state(rm, model.theta);
  for (auto _ : state) {
    const Observation obs = generate_observation(model, rng);
    s = rm_step(rm, s, obs.x, obs.y, 1.0);
    benchmark::DoNotOptimize(s.theta_hat);
  }
}
BENCHMARK(BM_RmStep);

void BM_NwUpdate(benchmark::State& state) {
  const ModelSpec model = experiment1_model();
  const KernelSpec kernel = uniform_kernel();
  Rng rng(2);
  NWState nw = make_nw_state(symmetric_grid(static_cast<int>(state.range(0))), 0.9);
  for (auto _ : state) {
    const Observation obs = generate_observation(model, rng);
    nw_update(nw, kernel, obs.x, obs.y, 0.1);
    benchmark::DoNotOptimize(nw.n);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_NwUpdate)->Arg(101)->Arg(1001);

void BM_SecondMomentQuadrature(benchmark::State& state) {
  const ModelSpec model = experiment1_model();
  for (auto _ : state) {
    benchmark::DoNotOptimize(varphi_quadrature(model, model.theta));
  }
}
BENCHMARK(BM_SecondMomentQuadrature);

void BM_SingleRun(benchmark::State& state) {
  ScenarioConfig config;
  config.model = experiment1_model();
  config.n_per_curve = state.range(0);
  config.rm = bench_rm_config();
  config.nw.enabled = true;
  config.seed = 3;
  int replicate = 0;
  for (auto _ : state) {
    const RunReport report = run_experiment_single(config, replicate++);
    benchmark::DoNotOptimize(report.final_theta_hat);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SingleRun)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
