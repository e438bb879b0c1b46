// Copyright 2026 The srpass Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <vector>

#include "srpass/brownian.hpp"
#include "srpass/fitting.hpp"
#include "srpass/histogram.hpp"

using namespace srpass;

namespace {

const std::vector<double>& samples() {
  static const auto t = bm_passage_ensemble(correspondence_map(3.2, 1.5625), 10000, 1);
  return t;
}

void BM_FitIGMle(benchmark::State& state) {
  const auto& t = samples();
  for (auto _ : state) benchmark::DoNotOptimize(fit_ig_mle(t));
}
BENCHMARK(BM_FitIGMle);

void BM_FitIGLsq(benchmark::State& state) {
  const Histogram h = make_histogram(samples());
  for (auto _ : state) benchmark::DoNotOptimize(fit_ig_lsq(h));
}
BENCHMARK(BM_FitIGLsq)->Unit(benchmark::kMicrosecond);

void BM_FitGumbelLsq(benchmark::State& state) {
  const Histogram h = make_histogram(samples());
  for (auto _ : state) benchmark::DoNotOptimize(fit_gumbel_lsq(h));
}
BENCHMARK(BM_FitGumbelLsq)->Unit(benchmark::kMicrosecond);

void BM_BrownianPassage(benchmark::State& state) {
  const DriftSpec spec = correspondence_map(3.2, 1.5625);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(bm_passage_ensemble(spec, 100, ++seed));
  state.SetItemsProcessed(state.iterations() * 100);
}
BENCHMARK(BM_BrownianPassage)->Unit(benchmark::kMillisecond);

}  // namespace
