// Copyright 2026 The srpass Authors
// SPDX-License-Identifier: Apache-2.0

#include "srpass/scaling.hpp"

#include <algorithm>
#include <cmath>

#include "srpass/error.hpp"

namespace srpass {

namespace {

// Density of h on [a, b), which lies inside one of its bins or outside it.
double density_on(const Histogram& h, double a, double b) {
  const double mid = 0.5 * (a + b);
  if (mid < h.bin_edges.front() || mid > h.bin_edges.back()) return 0.0;
  auto it = std::upper_bound(h.bin_edges.begin(), h.bin_edges.end(), mid);
  const auto i = std::min<std::size_t>(static_cast<std::size_t>(it - h.bin_edges.begin()) - 1, h.bins() - 1);
  return h.density(i);
}

}  // namespace

Histogram scaled_histogram(std::span<const double> samples, double gamma, std::size_t bins) {
  if (!(gamma > 0.0)) throw DomainError("gamma must be > 0");
  std::vector<double> scaled(samples.begin(), samples.end());
  for (double& t : scaled) t *= gamma;
  return make_histogram(scaled, bins);
}

double overlap(const Histogram& h1, const Histogram& h2) {
  if (h1.total == 0 || h2.total == 0 || h1.bins() == 0 || h2.bins() == 0) {
    throw DomainError("overlap of an empty histogram");
  }
  std::vector<double> edges = h1.bin_edges;
  edges.insert(edges.end(), h2.bin_edges.begin(), h2.bin_edges.end());
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  double cross = 0.0, n1 = 0.0, n2 = 0.0;
  for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
    const double w = edges[k + 1] - edges[k];
    const double a = density_on(h1, edges[k], edges[k + 1]);
    const double b = density_on(h2, edges[k], edges[k + 1]);
    cross += a * b * w;
    n1 += a * a * w;
    n2 += b * b * w;
  }
  if (!(n1 > 0.0) || !(n2 > 0.0)) throw DomainError("overlap of an empty histogram");
  return std::clamp(cross * cross / (n1 * n2), 0.0, 1.0);
}

double s_ratio(const IGParams& p) {
  if (!(p.mu > 0.0) || !(p.lambda > 0.0)) throw DomainError("inverse Gaussian parameters must be > 0");
  return p.lambda / (p.mu * p.mu);
}

std::string_view regime_name(Regime r) {
  switch (r) {
    case Regime::weak: return "weak";
    case Regime::strong: return "strong";
    case Regime::transient: return "transient";
  }
  return "transient";
}

Regime classify_regime(double mean_passage_time, double critical_time) {
  if (mean_passage_time > 2.0 * critical_time) return Regime::weak;
  if (mean_passage_time < 0.5 * critical_time) return Regime::strong;
  return Regime::transient;
}

LinearFit fit_s_vs_gamma(std::span<const std::pair<double, double>> points, Regime regime) {
  if (regime == Regime::transient) throw FitError("no s(gamma) law in the transient regime");
  if (points.size() < 2) throw FitError("s(gamma) fit needs at least two points");
  LinearFit f{};
  if (regime == Regime::weak) {
    double xy = 0.0, xx = 0.0;
    for (const auto& [x, y] : points) {
      xy += x * y;
      xx += x * x;
    }
    if (!(xx > 0.0)) throw FitError("s(gamma) fit needs a nonzero coupling");
    f.slope = xy / xx;
    f.intercept = 0.0;
  } else {
    const double n = static_cast<double>(points.size());
    double mx = 0.0, my = 0.0;
    for (const auto& [x, y] : points) {
      mx += x;
      my += y;
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0;
    for (const auto& [x, y] : points) {
      sxy += (x - mx) * (y - my);
      sxx += (x - mx) * (x - mx);
    }
    if (!(sxx > 0.0)) throw FitError("s(gamma) fit needs at least two distinct couplings");
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
  }
  for (const auto& [x, y] : points) {
    const double r = y - (f.slope * x + f.intercept);
    f.residual += r * r;
  }
  return f;
}

double ks_statistic(std::span<const double> samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) return 0.0;
  std::vector<double> s(samples.begin(), samples.end());
  std::sort(s.begin(), s.end());
  const double n = static_cast<double>(s.size());
  double d = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double f = cdf(s[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return std::clamp(d, 0.0, 1.0);
}

double ks_critical_value(std::size_t n, double alpha) {
  if (n == 0 || !(alpha > 0.0 && alpha < 1.0)) throw DomainError("KS critical value needs n > 0, alpha in (0, 1)");
  return std::sqrt(-std::log(alpha / 2.0) / 2.0) / std::sqrt(static_cast<double>(n));
}

}  // namespace srpass
