// Copyright 2026 The srpass Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace srpass {

struct Histogram {
  std::vector<double> bin_edges;     // ascending, bins() + 1 entries
  std::vector<std::size_t> counts;
  std::size_t total = 0;

  std::size_t bins() const { return counts.size(); }
  double width(std::size_t i) const { return bin_edges[i + 1] - bin_edges[i]; }
  double center(std::size_t i) const { return 0.5 * (bin_edges[i] + bin_edges[i + 1]); }
  // count / (total * width): a piecewise-constant probability density.
  double density(std::size_t i) const;
  std::vector<double> densities() const;
  std::vector<double> centers() const;
  std::size_t nonempty_bins() const;
};

inline constexpr std::size_t kMinBins = 20;
inline constexpr std::size_t kMaxBins = 200;

// Freedman-Diaconis bin count, 2 IQR n^{-1/3} wide bins over the sample
// range, clamped to [kMinBins, kMaxBins].
std::size_t freedman_diaconis_bins(std::span<const double> samples);

// Equal-width bins over [min, max]; a zero range is widened to one unit.
// bins == 0 selects the Freedman-Diaconis count.  Throws DomainError on an
// empty or non-finite sample.
Histogram make_histogram(std::span<const double> samples, std::size_t bins = 0);

// Fixed edges; samples outside [edges.front(), edges.back()] are dropped
// and not counted in total.
Histogram make_histogram(std::span<const double> samples, std::vector<double> edges);

}  // namespace srpass
