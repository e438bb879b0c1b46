// Copyright 2026 The srpass Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "srpass/distributions.hpp"
#include "srpass/rng.hpp"

namespace srpass {

// X_t = nu t + sigma B_t absorbed at X = alpha, integrated with step dt.
struct DriftSpec {
  double nu;
  double sigma;
  double alpha;
  double dt;

  // Throws DomainError unless every field is finite and > 0.
  void validate() const;
  // Exact first-passage law IG(alpha / nu, alpha^2 / sigma^2).
  IGParams passage_law() const;
};

inline constexpr std::size_t kMaxBrownianSteps = 1'000'000;

// First time the Euler-Maruyama walk reaches alpha.  After a step that stays
// below alpha, a crossing inside the step is still declared with the Brownian
// bridge probability exp(-2 (alpha - X_prev)(alpha - X_next) / (sigma^2 dt))
// and placed at the step midpoint; direct crossings are interpolated
// linearly.  Throws DomainError after kMaxBrownianSteps steps.
double bm_first_passage_sample(const DriftSpec& spec, Rng& rng);

// nu = 1, alpha = mean_T, sigma = 1 / sqrt(s), dt = mean_T / 1e4.
DriftSpec correspondence_map(double mean_t, double s);

// n independent samples; sample i uses stream_seed(seed, i).
std::vector<double> bm_passage_ensemble(const DriftSpec& spec, std::size_t n, std::uint64_t seed);

}  // namespace srpass
