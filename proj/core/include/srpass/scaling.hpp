// Copyright 2026 The srpass Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "srpass/distributions.hpp"
#include "srpass/histogram.hpp"
#include "srpass/model.hpp"

namespace srpass {

// Histogram of the rescaled passage times gamma * T_i.  bins == 0 selects
// the Freedman-Diaconis count.
Histogram scaled_histogram(std::span<const double> samples, double gamma, std::size_t bins = 0);

// [int h1 h2]^2 / (int h1^2 int h2^2) of two histograms read as piecewise
// constant densities, integrated exactly over the union of their bin edges.
// Lies in [0, 1] and equals 1 iff the densities are proportional.  Throws
// DomainError when either histogram is empty.
double overlap(const Histogram& h1, const Histogram& h2);

// s = lambda / mu^2 = mean / variance.
double s_ratio(const IGParams& p);

enum class Regime { weak, strong, transient };

std::string_view regime_name(Regime r);

// Weak pulse when the mean passage time exceeds 2 tau_c, strong pulse below
// tau_c / 2, transient in between.
Regime classify_regime(double mean_passage_time, double critical_time = kCriticalTime);

struct LinearFit {
  double slope;
  double intercept;
  double residual;  // sum of squared residuals
};

// Least-squares s(Gamma).  The weak-pulse line is forced through the origin;
// the strong-pulse line is ordinary least squares.  Throws FitError for fewer
// than two points or for a transient regime.
LinearFit fit_s_vs_gamma(std::span<const std::pair<double, double>> points, Regime regime);

// sup_x |F_n(x) - F(x)| of the empirical distribution function of samples.
// Empty samples give 0.
double ks_statistic(std::span<const double> samples, const std::function<double(double)>& cdf);

// Asymptotic one-sample critical value sqrt(-ln(alpha/2) / 2) / sqrt(n).
double ks_critical_value(std::size_t n, double alpha);

}  // namespace srpass
