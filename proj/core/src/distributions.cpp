// Copyright 2026 The srpass Authors
// SPDX-License-Identifier: Apache-2.0

#include "srpass/distributions.hpp"

#include <cmath>
#include <numbers>

#include "srpass/error.hpp"

namespace srpass {

namespace {

constexpr double kEulerGamma = 0.57721566490153286061;

void check(const IGParams& p) {
  if (!(p.mu > 0.0) || !(p.lambda > 0.0) || !std::isfinite(p.mu) || !std::isfinite(p.lambda)) {
    throw DomainError("inverse Gaussian parameters must be finite and > 0");
  }
}

void check(const GumbelParams& p) {
  if (!(p.lambda > 0.0) || !std::isfinite(p.lambda) || !std::isfinite(p.mu)) {
    throw DomainError("Gumbel scale must be finite and > 0");
  }
}

// log Phi(-x) for large positive x, where erfc underflows.
double log_normal_tail(double x) {
  if (x < 20.0) return std::log(0.5 * std::erfc(x / std::numbers::sqrt2));
  const double x2 = x * x;
  const double series = 1.0 - 1.0 / x2 + 3.0 / (x2 * x2) - 15.0 / (x2 * x2 * x2);
  return -0.5 * x2 - std::log(x) - 0.5 * std::log(2.0 * std::numbers::pi) + std::log(series);
}

}  // namespace

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double ig_pdf(double t, const IGParams& p) {
  check(p);
  if (!(t > 0.0)) return 0.0;
  const double d = t - p.mu;
  return std::sqrt(p.lambda / (2.0 * std::numbers::pi * t * t * t)) *
         std::exp(-p.lambda * d * d / (2.0 * p.mu * p.mu * t));
}

double ig_cdf(double t, const IGParams& p) {
  check(p);
  if (!(t > 0.0)) return 0.0;
  if (std::isinf(t)) return 1.0;
  const double r = std::sqrt(p.lambda / t);
  const double first = normal_cdf(r * (t / p.mu - 1.0));
  const double second = std::exp(2.0 * p.lambda / p.mu + log_normal_tail(r * (t / p.mu + 1.0)));
  return std::min(1.0, first + second);
}

double gumbel_pdf(double t, const GumbelParams& p) {
  check(p);
  const double z = (t - p.mu) / p.lambda;
  return std::exp(-z - std::exp(-z)) / p.lambda;
}

double gumbel_cdf(double t, const GumbelParams& p) {
  check(p);
  return std::exp(-std::exp(-(t - p.mu) / p.lambda));
}

Moments ig_moments(const IGParams& p) {
  check(p);
  const double ratio = p.mu / p.lambda;
  return {p.mu, p.mu * p.mu * p.mu / p.lambda, 3.0 * std::sqrt(ratio), 15.0 * ratio};
}

Moments gumbel_moments(const GumbelParams& p) {
  check(p);
  // Skewness 12 sqrt(6) zeta(3) / pi^3.
  constexpr double kSkew = 1.1395470994046486;
  return {p.mu + kEulerGamma * p.lambda, std::numbers::pi * std::numbers::pi * p.lambda * p.lambda / 6.0,
          kSkew, 2.4};
}

Moments sample_moments(std::span<const double> samples) {
  const std::size_t n = samples.size();
  if (n < 2) throw DomainError("sample moments need at least two samples");
  double mean = 0.0;
  for (double x : samples) mean += x;
  mean /= static_cast<double>(n);
  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (double x : samples) {
    const double d = x - mean;
    const double d2 = d * d;
    m2 += d2;
    m3 += d2 * d;
    m4 += d2 * d2;
  }
  const double dn = static_cast<double>(n);
  m2 /= dn;
  m3 /= dn;
  m4 /= dn;
  Moments out{mean, m2 * dn / (dn - 1.0), 0.0, 0.0};
  if (m2 > 0.0) {
    out.skew = m3 / std::pow(m2, 1.5);
    out.kurtosis = m4 / (m2 * m2) - 3.0;
  }
  return out;
}

double ig_sample(const IGParams& p, Rng& rng) {
  check(p);
  const double nu = rng.normal();
  const double y = nu * nu;
  const double mu = p.mu;
  // Smaller root of the quadratic, mu (1 + a - sqrt(2a + a^2)) with
  // a = mu y / (2 lambda), written without cancellation.
  const double a = mu * y / (2.0 * p.lambda);
  const double x = mu / (1.0 + a + std::sqrt(a * (2.0 + a)));
  return rng.uniform() <= mu / (mu + x) ? x : mu * mu / x;
}

}  // namespace srpass
