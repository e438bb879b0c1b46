// Copyright 2026 The srpass Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "srpass/distributions.hpp"
#include "srpass/histogram.hpp"

namespace srpass {

// Maximum likelihood: mu = sample mean, lambda = n / sum(1/T_i - 1/mu).
// Throws DomainError on nonpositive samples and FitError for fewer than two
// samples or zero dispersion.
IGParams fit_ig_mle(std::span<const double> samples);

struct LsqOptions {
  std::size_t max_evaluations = 2000;
};

// Least squares of the histogram density against the pdf at bin centres.
// The IG fit starts from the histogram mean and variance; the Gumbel fit from
// the method of moments unless an initial guess is given.  Parameters are
// optimised in log scale where they must be positive.  Throws FitError for
// fewer than five nonempty bins or when the optimiser does not converge.
IGParams fit_ig_lsq(const Histogram& h, std::optional<IGParams> initial = std::nullopt,
                    const LsqOptions& options = {});
GumbelParams fit_gumbel_lsq(const Histogram& h, std::optional<GumbelParams> initial = std::nullopt,
                            const LsqOptions& options = {});

// Mean and variance of a histogram, treating every count as sitting at its
// bin centre.
Moments histogram_moments(const Histogram& h);

struct MomentErrors {
  double mean;
  double variance;
  double skew;
  double kurtosis;
};

struct FitQuality {
  double residual_sum = 0.0;  // sum over bins of (density - pdf(centre))^2
  MomentErrors moment_errors{};  // |model - sample| / |sample|
};

using Pdf = std::function<double(double)>;

double residual_sum(const Histogram& h, const Pdf& pdf);

FitQuality fit_quality(const Histogram& h, const Pdf& pdf, const Moments& model, const Moments& sample);
FitQuality fit_quality(const Histogram& h, const IGParams& p, std::span<const double> samples);
FitQuality fit_quality(const Histogram& h, const GumbelParams& p, std::span<const double> samples);

// Relative disagreement max(|mu_a - mu_b| / mu_b, |lambda_a - lambda_b| / lambda_b).
double relative_disagreement(const IGParams& a, const IGParams& b);

inline constexpr double kMaxExcludedFraction = 0.05;
inline constexpr double kFitWarningDisagreement = 0.10;

// Everything reported for one set of passage times: the histogram, IG fits
// by least squares and maximum likelihood, the Gumbel least-squares fit and
// the quality of each.  Failed fits are left empty with the reason in errors.
struct PassageAnalysis {
  std::size_t n_samples = 0;
  std::size_t n_excluded = 0;  // absent passages
  bool valid = false;          // false when more than 5% were excluded
  Histogram histogram;
  std::optional<IGParams> ig_lsq;
  std::optional<IGParams> ig_mle;
  std::optional<GumbelParams> gumbel_lsq;
  std::optional<FitQuality> ig_lsq_quality;
  std::optional<FitQuality> ig_mle_quality;
  std::optional<FitQuality> gumbel_lsq_quality;
  std::vector<std::string> errors;
  std::vector<std::string> warnings;
};

// times are the recorded passages; n_excluded counts the absent ones.
// bins == 0 selects the Freedman-Diaconis count.
PassageAnalysis analyze_passage_times(std::span<const double> times, std::size_t n_excluded, std::size_t bins = 0);

}  // namespace srpass
