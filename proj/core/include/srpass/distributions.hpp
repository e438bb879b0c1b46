// Copyright 2026 The srpass Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>

#include "srpass/rng.hpp"

namespace srpass {

// Inverse Gaussian, sqrt(lambda / 2 pi T^3) exp(-lambda (T - mu)^2 / (2 mu^2 T)).
struct IGParams {
  double mu;
  double lambda;
};

// Gumbel, (1/lambda) exp(-(T - mu)/lambda) exp(-exp(-(T - mu)/lambda)).
struct GumbelParams {
  double mu;
  double lambda;
};

struct Moments {
  double mean;
  double variance;
  double skew;
  double kurtosis;  // excess kurtosis
};

// Densities and distribution functions.  The IG functions vanish for T <= 0.
// Nonpositive mu or lambda (IG) or lambda (Gumbel) throw DomainError.
double ig_pdf(double t, const IGParams& p);
double ig_cdf(double t, const IGParams& p);
double gumbel_pdf(double t, const GumbelParams& p);
double gumbel_cdf(double t, const GumbelParams& p);

// mean mu, variance mu^3 / lambda, skew 3 sqrt(mu / lambda),
// excess kurtosis 15 mu / lambda.
Moments ig_moments(const IGParams& p);
Moments gumbel_moments(const GumbelParams& p);

// Sample moments with the unbiased variance; n >= 2.
Moments sample_moments(std::span<const double> samples);

// Michael-Schucany-Haas transformation sampler.
double ig_sample(const IGParams& p, Rng& rng);

// Standard normal distribution function.
double normal_cdf(double x);

}  // namespace srpass
