// Copyright 2026 The srpass Authors
// SPDX-License-Identifier: Apache-2.0

#include "srpass/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Core>
#include <unsupported/Eigen/NonLinearOptimization>
#include <unsupported/Eigen/NumericalDiff>

#include "srpass/error.hpp"

namespace srpass {

namespace {

constexpr double kEulerGamma = 0.57721566490153286061;

// Residuals density_i - pdf(centre_i; x) for Eigen's Levenberg-Marquardt.
struct HistogramResiduals {
  using Scalar = double;
  using InputType = Eigen::VectorXd;
  using ValueType = Eigen::VectorXd;
  using JacobianType = Eigen::MatrixXd;
  enum { InputsAtCompileTime = Eigen::Dynamic, ValuesAtCompileTime = Eigen::Dynamic };

  std::vector<double> centers;
  std::vector<double> densities;
  std::function<double(double, const Eigen::VectorXd&)> model;

  int inputs() const { return 2; }
  int values() const { return static_cast<int>(centers.size()); }

  int operator()(const Eigen::VectorXd& x, Eigen::VectorXd& f) const {
    for (std::size_t i = 0; i < centers.size(); ++i) {
      f[static_cast<Eigen::Index>(i)] = densities[i] - model(centers[i], x);
    }
    return 0;
  }
};

Eigen::VectorXd least_squares(const Histogram& h, std::function<double(double, const Eigen::VectorXd&)> model,
                              Eigen::VectorXd x, const LsqOptions& options, const char* name) {
  if (h.nonempty_bins() < 5) {
    throw FitError(std::string(name) + " least-squares fit needs at least 5 nonempty bins, got " +
                   std::to_string(h.nonempty_bins()));
  }
  HistogramResiduals r{h.centers(), h.densities(), std::move(model)};
  Eigen::NumericalDiff<HistogramResiduals> functor(r);
  Eigen::LevenbergMarquardt<Eigen::NumericalDiff<HistogramResiduals>> lm(functor);
  lm.parameters.maxfev = static_cast<Eigen::Index>(options.max_evaluations);
  lm.parameters.xtol = 1e-12;
  lm.parameters.ftol = 1e-14;
  const auto status = lm.minimize(x);
  using Status = Eigen::LevenbergMarquardtSpace::Status;
  const bool ok = status == Status::RelativeReductionTooSmall || status == Status::RelativeErrorTooSmall ||
                  status == Status::RelativeErrorAndReductionTooSmall || status == Status::CosinusTooSmall ||
                  status == Status::FtolTooSmall || status == Status::XtolTooSmall ||
                  status == Status::GtolTooSmall;
  if (!ok || !x.allFinite()) {
    throw FitError(std::string(name) + " least-squares fit did not converge (status " +
                   std::to_string(static_cast<int>(status)) + " after " + std::to_string(lm.nfev) +
                   " evaluations)");
  }
  return x;
}

double rel(double model, double sample) {
  if (sample == 0.0) return std::abs(model);
  return std::abs(model - sample) / std::abs(sample);
}

}  // namespace

IGParams fit_ig_mle(std::span<const double> samples) {
  if (samples.size() < 2) throw FitError("inverse Gaussian fit needs at least two samples");
  if (std::all_of(samples.begin(), samples.end(), [&](double t) { return t == samples[0]; })) {
    throw FitError("degenerate inverse Gaussian fit: samples have no dispersion");
  }
  double sum = 0.0;
  for (double t : samples) {
    if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("inverse Gaussian samples must be finite and > 0");
    sum += t;
  }
  const double n = static_cast<double>(samples.size());
  const double mu = sum / n;
  double inv = 0.0;
  for (double t : samples) inv += 1.0 / t - 1.0 / mu;
  // Jensen: inv >= 0 with equality only for constant samples.
  if (!(inv > 1e-14 * n / mu)) throw FitError("degenerate inverse Gaussian fit: samples have no dispersion");
  return {mu, n / inv};
}

Moments histogram_moments(const Histogram& h) {
  if (h.total == 0) throw DomainError("moments of an empty histogram");
  const double n = static_cast<double>(h.total);
  double mean = 0.0;
  for (std::size_t i = 0; i < h.bins(); ++i) mean += static_cast<double>(h.counts[i]) * h.center(i);
  mean /= n;
  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (std::size_t i = 0; i < h.bins(); ++i) {
    const double d = h.center(i) - mean;
    const double c = static_cast<double>(h.counts[i]);
    m2 += c * d * d;
    m3 += c * d * d * d;
    m4 += c * d * d * d * d;
  }
  m2 /= n;
  m3 /= n;
  m4 /= n;
  Moments m{mean, m2, 0.0, 0.0};
  if (m2 > 0.0) {
    m.skew = m3 / std::pow(m2, 1.5);
    m.kurtosis = m4 / (m2 * m2) - 3.0;
  }
  return m;
}

IGParams fit_ig_lsq(const Histogram& h, std::optional<IGParams> initial, const LsqOptions& options) {
  if (!initial) {
    if (h.nonempty_bins() < 5) {
      throw FitError("inverse Gaussian least-squares fit needs at least 5 nonempty bins");
    }
    const Moments m = histogram_moments(h);
    if (!(m.mean > 0.0) || !(m.variance > 0.0)) throw FitError("no moment-based start for the inverse Gaussian fit");
    initial = IGParams{m.mean, m.mean * m.mean * m.mean / m.variance};
  }
  Eigen::VectorXd x(2);
  x << std::log(initial->mu), std::log(initial->lambda);
  auto model = [](double t, const Eigen::VectorXd& p) { return ig_pdf(t, {std::exp(p[0]), std::exp(p[1])}); };
  x = least_squares(h, model, x, options, "inverse Gaussian");
  return {std::exp(x[0]), std::exp(x[1])};
}

GumbelParams fit_gumbel_lsq(const Histogram& h, std::optional<GumbelParams> initial, const LsqOptions& options) {
  if (!initial) {
    if (h.nonempty_bins() < 5) throw FitError("Gumbel least-squares fit needs at least 5 nonempty bins");
    const Moments m = histogram_moments(h);
    if (!(m.variance > 0.0)) throw FitError("no moment-based start for the Gumbel fit");
    const double scale = std::sqrt(6.0 * m.variance) / std::numbers::pi;
    initial = GumbelParams{m.mean - kEulerGamma * scale, scale};
  }
  Eigen::VectorXd x(2);
  x << initial->mu, std::log(initial->lambda);
  auto model = [](double t, const Eigen::VectorXd& p) { return gumbel_pdf(t, {p[0], std::exp(p[1])}); };
  x = least_squares(h, model, x, options, "Gumbel");
  return {x[0], std::exp(x[1])};
}

double residual_sum(const Histogram& h, const Pdf& pdf) {
  double sum = 0.0;
  for (std::size_t i = 0; i < h.bins(); ++i) {
    const double d = h.density(i) - pdf(h.center(i));
    sum += d * d;
  }
  return sum;
}

FitQuality fit_quality(const Histogram& h, const Pdf& pdf, const Moments& model, const Moments& sample) {
  FitQuality q;
  q.residual_sum = residual_sum(h, pdf);
  q.moment_errors = {rel(model.mean, sample.mean), rel(model.variance, sample.variance), rel(model.skew, sample.skew),
                     rel(model.kurtosis, sample.kurtosis)};
  return q;
}

FitQuality fit_quality(const Histogram& h, const IGParams& p, std::span<const double> samples) {
  return fit_quality(h, [&](double t) { return ig_pdf(t, p); }, ig_moments(p), sample_moments(samples));
}

FitQuality fit_quality(const Histogram& h, const GumbelParams& p, std::span<const double> samples) {
  return fit_quality(h, [&](double t) { return gumbel_pdf(t, p); }, gumbel_moments(p), sample_moments(samples));
}

double relative_disagreement(const IGParams& a, const IGParams& b) {
  return std::max(std::abs(a.mu - b.mu) / b.mu, std::abs(a.lambda - b.lambda) / b.lambda);
}

PassageAnalysis analyze_passage_times(std::span<const double> times, std::size_t n_excluded, std::size_t bins) {
  PassageAnalysis a;
  a.n_samples = times.size();
  a.n_excluded = n_excluded;
  const double total = static_cast<double>(times.size() + n_excluded);
  a.valid = total > 0.0 && static_cast<double>(n_excluded) <= kMaxExcludedFraction * total;
  if (n_excluded > 0) {
    a.warnings.push_back(std::to_string(n_excluded) + " of " + std::to_string(times.size() + n_excluded) +
                         " passages not reached and excluded");
  }
  if (!a.valid && total > 0.0) a.errors.push_back("more than 5% of passages excluded; fits are invalid");
  if (times.empty()) {
    a.errors.push_back("no passage times recorded");
    a.valid = false;
    return a;
  }
  a.histogram = make_histogram(times, bins);

  auto attempt = [&a](const char* what, auto&& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      a.errors.push_back(std::string(what) + ": " + e.what());
    }
  };
  attempt("ig_mle", [&] {
    a.ig_mle = fit_ig_mle(times);
    a.ig_mle_quality = fit_quality(a.histogram, *a.ig_mle, times);
  });
  attempt("ig_lsq", [&] {
    a.ig_lsq = fit_ig_lsq(a.histogram);
    a.ig_lsq_quality = fit_quality(a.histogram, *a.ig_lsq, times);
  });
  attempt("gumbel_lsq", [&] {
    a.gumbel_lsq = fit_gumbel_lsq(a.histogram);
    a.gumbel_lsq_quality = fit_quality(a.histogram, *a.gumbel_lsq, times);
  });
  if (a.ig_lsq && a.ig_mle && relative_disagreement(*a.ig_lsq, *a.ig_mle) > kFitWarningDisagreement) {
    a.warnings.push_back("least-squares and maximum-likelihood IG fits differ by more than 10%");
  }
  return a;
}

}  // namespace srpass
