// Copyright 2026 The srpass Authors
// SPDX-License-Identifier: Apache-2.0

#include "srpass/histogram.hpp"

#include <algorithm>
#include <cmath>

#include "srpass/error.hpp"

namespace srpass {

namespace {

void check_samples(std::span<const double> samples) {
  if (samples.empty()) throw DomainError("histogram of an empty sample");
  for (double x : samples) {
    if (!std::isfinite(x)) throw DomainError("histogram sample is not finite");
  }
}

// Linear-interpolation quantile of sorted data.
double quantile(const std::vector<double>& sorted, double q) {
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

}  // namespace

double Histogram::density(std::size_t i) const {
  if (total == 0) return 0.0;
  return static_cast<double>(counts[i]) / (static_cast<double>(total) * width(i));
}

std::vector<double> Histogram::densities() const {
  std::vector<double> d(bins());
  for (std::size_t i = 0; i < bins(); ++i) d[i] = density(i);
  return d;
}

std::vector<double> Histogram::centers() const {
  std::vector<double> c(bins());
  for (std::size_t i = 0; i < bins(); ++i) c[i] = center(i);
  return c;
}

std::size_t Histogram::nonempty_bins() const {
  return static_cast<std::size_t>(std::count_if(counts.begin(), counts.end(), [](auto c) { return c > 0; }));
}

std::size_t freedman_diaconis_bins(std::span<const double> samples) {
  check_samples(samples);
  std::vector<double> s(samples.begin(), samples.end());
  std::sort(s.begin(), s.end());
  const double range = s.back() - s.front();
  const double iqr = quantile(s, 0.75) - quantile(s, 0.25);
  if (!(range > 0.0) || !(iqr > 0.0)) return kMinBins;
  const double h = 2.0 * iqr * std::cbrt(1.0 / static_cast<double>(s.size()));
  const double n = std::ceil(range / h);
  return static_cast<std::size_t>(std::clamp(n, static_cast<double>(kMinBins), static_cast<double>(kMaxBins)));
}

Histogram make_histogram(std::span<const double> samples, std::size_t bins) {
  check_samples(samples);
  if (bins == 0) bins = freedman_diaconis_bins(samples);
  const auto [lo_it, hi_it] = std::minmax_element(samples.begin(), samples.end());
  double lo = *lo_it, hi = *hi_it;
  if (!(hi > lo)) {
    lo -= 0.5;
    hi += 0.5;
  }
  std::vector<double> edges(bins + 1);
  for (std::size_t i = 0; i <= bins; ++i) {
    edges[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(bins);
  }
  edges.back() = hi;

  Histogram h;
  h.counts.assign(bins, 0);
  const double scale = static_cast<double>(bins) / (hi - lo);
  for (double x : samples) {
    auto i = static_cast<std::size_t>((x - lo) * scale);
    if (i >= bins) i = bins - 1;
    // Guard the rounding of the scaled index against the stored edges.
    while (i > 0 && x < edges[i]) --i;
    while (i + 1 < bins && x >= edges[i + 1]) ++i;
    ++h.counts[i];
  }
  h.total = samples.size();
  h.bin_edges = std::move(edges);
  return h;
}

Histogram make_histogram(std::span<const double> samples, std::vector<double> edges) {
  if (edges.size() < 2) throw DomainError("histogram needs at least two edges");
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (!(edges[i] > edges[i - 1])) throw DomainError("histogram edges must be strictly ascending");
  }
  Histogram h;
  h.counts.assign(edges.size() - 1, 0);
  for (double x : samples) {
    if (!(x >= edges.front() && x <= edges.back())) continue;
    auto it = std::upper_bound(edges.begin(), edges.end(), x);
    auto i = static_cast<std::size_t>(it - edges.begin());
    i = i == 0 ? 0 : std::min(i - 1, h.counts.size() - 1);
    ++h.counts[i];
    ++h.total;
  }
  h.bin_edges = std::move(edges);
  return h;
}

}  // namespace srpass
