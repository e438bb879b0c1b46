// Copyright 2026 The srpass Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <vector>

#include "srpass/dynamics.hpp"
#include "srpass/ensemble.hpp"

using namespace srpass;

namespace {

ModelConfig config(double gamma, bool backward) {
  ModelConfig cfg;
  cfg.gamma = gamma;
  cfg.backward_enabled = backward;
  return cfg;
}

void BM_Step(benchmark::State& state) {
  const Model model(config(1.0, state.range(0) != 0));
  Rng rng(1);
  FieldState s = seed_trajectory(model, rng);
  for (auto _ : state) {
    s = step(s, model);
    benchmark::DoNotOptimize(s.e_field.data());
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Step)->Arg(0)->Arg(1);

void BM_Trajectory(benchmark::State& state) {
  const Model model(config(1.0, true));
  const std::vector<double> thresholds{10.0};
  std::uint64_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_trajectory(model, stream_seed(1, i++), thresholds));
  }
}
BENCHMARK(BM_Trajectory)->Unit(benchmark::kMillisecond);

// Lane-blocked ensemble path, per trajectory.
void BM_Ensemble(benchmark::State& state) {
  const Model model(config(1.0, state.range(0) != 0));
  const std::vector<double> thresholds{10.0};
  EnsembleOptions opts;
  opts.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_ensemble(model, 64, thresholds, opts));
  }
  state.SetItemsProcessed(state.iterations() * 64);
}
BENCHMARK(BM_Ensemble)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace
