// Copyright 2026 The srpass Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "srpass/bessel.hpp"
#include "srpass/kernels.hpp"

using namespace srpass;

namespace {

void BM_BesselJ0(benchmark::State& state) {
  double x = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bessel::j0(x));
    x = x < 60.0 ? x + 0.37 : 0.0;
  }
}
BENCHMARK(BM_BesselJ0);

void BM_KernelF11(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernel_scaled(KernelKind::F11, 2.0, 3.0));
}
BENCHMARK(BM_KernelF11)->Unit(benchmark::kMicrosecond);

void BM_FluxProfile(benchmark::State& state) {
  const Model model{ModelConfig{}};
  for (auto _ : state) benchmark::DoNotOptimize(quantum_flux_profile(2.0, model));
}
BENCHMARK(BM_FluxProfile)->Unit(benchmark::kMillisecond);

}  // namespace
