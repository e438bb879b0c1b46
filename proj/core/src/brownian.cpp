// Copyright 2026 The srpass Authors
// SPDX-License-Identifier: Apache-2.0

#include "srpass/brownian.hpp"

#include <cmath>

#include "srpass/error.hpp"

namespace srpass {

void DriftSpec::validate() const {
  for (double v : {nu, sigma, alpha, dt}) {
    if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("drift parameters must be finite and > 0");
  }
}

IGParams DriftSpec::passage_law() const {
  validate();
  return {alpha / nu, alpha * alpha / (sigma * sigma)};
}

double bm_first_passage_sample(const DriftSpec& spec, Rng& rng) {
  spec.validate();
  const double drift = spec.nu * spec.dt;
  const double kick = spec.sigma * std::sqrt(spec.dt);
  const double bridge = 2.0 / (spec.sigma * spec.sigma * spec.dt);
  double x = 0.0;
  for (std::size_t n = 0; n < kMaxBrownianSteps; ++n) {
    const double next = x + drift + kick * rng.normal();
    const double t0 = static_cast<double>(n) * spec.dt;
    if (next >= spec.alpha) {
      return t0 + spec.dt * (spec.alpha - x) / (next - x);
    }
    if (rng.uniform() < std::exp(-bridge * (spec.alpha - x) * (spec.alpha - next))) {
      return t0 + 0.5 * spec.dt;
    }
    x = next;
  }
  throw DomainError("Brownian first passage not reached within the step limit");
}

DriftSpec correspondence_map(double mean_t, double s) {
  if (!(mean_t > 0.0) || !(s > 0.0)) throw DomainError("mean passage time and s must be > 0");
  return {1.0, 1.0 / std::sqrt(s), mean_t, mean_t / 1e4};
}

std::vector<double> bm_passage_ensemble(const DriftSpec& spec, std::size_t n, std::uint64_t seed) {
  spec.validate();
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng(stream_seed(seed, i));
    out.push_back(bm_first_passage_sample(spec, rng));
  }
  return out;
}

}  // namespace srpass
