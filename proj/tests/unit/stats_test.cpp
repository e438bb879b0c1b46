// Copyright 2026 The srpass Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "srpass/distributions.hpp"
#include "srpass/error.hpp"
#include "srpass/fitting.hpp"
#include "srpass/histogram.hpp"
#include "srpass/quadrature.hpp"
#include "srpass/rng.hpp"
#include "srpass/scaling.hpp"

using namespace srpass;

namespace {

std::vector<double> ig_draws(IGParams p, std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> out(n);
  for (auto& x : out) x = ig_sample(p, rng);
  return out;
}

std::vector<double> gumbel_draws(GumbelParams p, std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> out(n);
  for (auto& x : out) x = p.mu - p.lambda * std::log(-std::log(rng.uniform()));
  return out;
}

}  // namespace

TEST_CASE("ig and gumbel densities at distinguished points") {
  const double mu = 2.5;
  CHECK(ig_pdf(mu, {mu, mu}) == doctest::Approx(1.0 / (mu * std::sqrt(2.0 * std::numbers::pi))).epsilon(1e-14));
  CHECK(gumbel_pdf(1.3, {1.3, 0.7}) == doctest::Approx(std::exp(-1.0) / 0.7).epsilon(1e-14));
  CHECK(ig_pdf(0.0, {1.0, 1.0}) == 0.0);
  CHECK(ig_pdf(-1.0, {1.0, 1.0}) == 0.0);
  CHECK(ig_cdf(-1.0, {1.0, 1.0}) == 0.0);
  CHECK_THROWS_AS(ig_pdf(1.0, {0.0, 1.0}), DomainError);
  CHECK_THROWS_AS(ig_pdf(1.0, {1.0, -1.0}), DomainError);
  CHECK_THROWS_AS(gumbel_pdf(1.0, {1.0, 0.0}), DomainError);
}

TEST_CASE("densities integrate to one") {
  for (IGParams p : {IGParams{3.2, 16.0}, IGParams{1.0, 1.0}, IGParams{5.0, 5.0}, IGParams{0.1, 30.0}}) {
    const auto r = quad::integrate([&](double t) { return ig_pdf(t, p); }, 0.0, 50.0 * p.mu, {1e-12, 0.0, p.mu / 20});
    CHECK(std::abs(r.value - 1.0) < 1e-6);
    CHECK(ig_cdf(50.0 * p.mu, p) == doctest::Approx(r.value).epsilon(1e-8));
    CHECK(ig_cdf(p.mu, p) == doctest::Approx(quad::integrate([&](double t) { return ig_pdf(t, p); }, 0.0, p.mu,
                                                             {1e-12, 0.0, p.mu / 20})
                                                  .value)
                                 .epsilon(1e-9));
  }
  for (GumbelParams p : {GumbelParams{0.0, 1.0}, GumbelParams{4.0, 0.3}}) {
    const auto r = quad::integrate([&](double t) { return gumbel_pdf(t, p); }, p.mu - 40 * p.lambda,
                                   p.mu + 60 * p.lambda, {1e-12, 0.0, p.lambda});
    CHECK(std::abs(r.value - 1.0) < 1e-6);
    CHECK(gumbel_cdf(p.mu, p) == doctest::Approx(std::exp(-1.0)));
  }
}

TEST_CASE("ig moments") {
  const Moments m = ig_moments({3.2, 16.0});
  CHECK(m.mean == 3.2);
  CHECK(m.variance == doctest::Approx(2.048).epsilon(1e-14));
  CHECK(m.skew == doctest::Approx(3.0 * std::sqrt(0.2)).epsilon(1e-14));
  const Moments e = ig_moments({2.0, 2.0});
  CHECK(e.variance == doctest::Approx(4.0));
  CHECK(e.skew == doctest::Approx(3.0));
  CHECK(e.kurtosis == doctest::Approx(15.0));

  const auto draws = ig_draws({3.2, 16.0}, 100000, 1);
  const Moments s = sample_moments(draws);
  CHECK(s.mean == doctest::Approx(3.2).epsilon(0.02));
  CHECK(s.variance == doctest::Approx(2.048).epsilon(0.02));
  // Skew estimates converge more slowly; 10^5 draws fix it to a few percent.
  CHECK(s.skew == doctest::Approx(m.skew).epsilon(0.05));
}

TEST_CASE("gumbel moments") {
  const Moments m = gumbel_moments({1.0, 2.0});
  CHECK(m.mean == doctest::Approx(1.0 + 2.0 * std::numbers::egamma));
  CHECK(m.variance == doctest::Approx(std::numbers::pi * std::numbers::pi / 6.0 * 4.0));
  const Moments s = sample_moments(gumbel_draws({1.0, 2.0}, 100000, 3));
  CHECK(s.mean == doctest::Approx(m.mean).epsilon(0.01));
  CHECK(s.variance == doctest::Approx(m.variance).epsilon(0.02));
  CHECK(s.skew == doctest::Approx(m.skew).epsilon(0.05));
}

TEST_CASE("ig maximum likelihood") {
  const auto draws = ig_draws({3.2, 16.0}, 100000, 5);
  const IGParams p = fit_ig_mle(draws);
  CHECK(p.mu == doctest::Approx(3.2).epsilon(0.02));
  CHECK(p.lambda == doctest::Approx(16.0).epsilon(0.02));
  CHECK_THROWS_AS(fit_ig_mle(std::vector<double>{2.0, 2.0, 2.0}), FitError);
  CHECK_THROWS_AS(fit_ig_mle(std::vector<double>{1.0}), FitError);
  CHECK_THROWS_AS(fit_ig_mle(std::vector<double>{1.0, -2.0, 3.0}), DomainError);
  CHECK_THROWS_AS(fit_ig_mle(std::vector<double>{1.0, 0.0, 3.0}), DomainError);

  SUBCASE("scaling closure") {
    const double c = 7.5;
    auto scaled = draws;
    for (auto& x : scaled) x *= c;
    const IGParams q = fit_ig_mle(scaled);
    CHECK(q.mu == doctest::Approx(c * p.mu).epsilon(1e-12));
    CHECK(q.lambda == doctest::Approx(c * p.lambda).epsilon(1e-12));
    // s at coupling Gamma equals Gamma times s of the rescaled times Gamma T.
    CHECK(s_ratio(p) == doctest::Approx(c * s_ratio(q)).epsilon(1e-12));
  }
}

TEST_CASE("least-squares fits of synthetic histograms") {
  const auto ig = ig_draws({3.2, 16.0}, 100000, 9);
  const Histogram h = make_histogram(ig);
  const IGParams p = fit_ig_lsq(h);
  CHECK(p.mu == doctest::Approx(3.2).epsilon(0.05));
  CHECK(p.lambda == doctest::Approx(16.0).epsilon(0.05));

  const Histogram hg = make_histogram(gumbel_draws({2.0, 0.6}, 100000, 10));
  const GumbelParams g = fit_gumbel_lsq(hg);
  CHECK(g.mu == doctest::Approx(2.0).epsilon(0.05));
  CHECK(g.lambda == doctest::Approx(0.6).epsilon(0.05));

  // Each family fits its own data better.
  CHECK(residual_sum(h, [&](double t) { return ig_pdf(t, p); }) <
        residual_sum(h, [&](double t) { return gumbel_pdf(t, fit_gumbel_lsq(h)); }));
  CHECK(residual_sum(hg, [&](double t) { return gumbel_pdf(t, g); }) <
        residual_sum(hg, [&](double t) { return ig_pdf(t, fit_ig_lsq(hg)); }));

  const Histogram one = make_histogram(std::vector<double>{1.0, 1.0, 1.0}, 1);
  CHECK_THROWS_AS(fit_ig_lsq(one), FitError);
  CHECK_THROWS_AS(fit_gumbel_lsq(one), FitError);
}

TEST_CASE("fit quality") {
  const auto draws = ig_draws({3.2, 16.0}, 20000, 12);
  const Histogram h = make_histogram(draws);

  SUBCASE("histogram interpolant has zero residual") {
    const Pdf step = [&](double t) {
      for (std::size_t i = 0; i < h.bins(); ++i) {
        if (t >= h.bin_edges[i] && t < h.bin_edges[i + 1]) return h.density(i);
      }
      return 0.0;
    };
    CHECK(residual_sum(h, step) == 0.0);
  }

  SUBCASE("residual grows as mu moves away from the optimum") {
    const IGParams best = fit_ig_lsq(h);
    const double r0 = fit_quality(h, best, draws).residual_sum;
    for (int side : {-1, 1}) {
      double prev = r0;
      for (int k = 1; k <= 4; ++k) {
        const IGParams q{best.mu * (1.0 + side * 0.05 * k), best.lambda};
        const double r = fit_quality(h, q, draws).residual_sum;
        CHECK(r > prev);
        prev = r;
      }
    }
  }

  SUBCASE("moment errors") {
    const IGParams p = fit_ig_mle(draws);
    const FitQuality q = fit_quality(h, p, draws);
    CHECK(q.residual_sum >= 0.0);
    CHECK(q.moment_errors.mean < 1e-12);
    CHECK(q.moment_errors.variance < 0.05);
    CHECK(q.moment_errors.skew < 0.15);
  }
}

TEST_CASE("histogram construction") {
  const auto draws = ig_draws({1.0, 3.0}, 5000, 2);
  const Histogram h = make_histogram(draws);
  CHECK(h.bins() >= kMinBins);
  CHECK(h.bins() <= kMaxBins);
  CHECK(h.total == draws.size());
  std::size_t sum = 0;
  double mass = 0.0;
  for (std::size_t i = 0; i < h.bins(); ++i) {
    sum += h.counts[i];
    mass += h.density(i) * h.width(i);
    CHECK(h.bin_edges[i + 1] > h.bin_edges[i]);
  }
  CHECK(sum == h.total);
  CHECK(mass == doctest::Approx(1.0));
  CHECK(freedman_diaconis_bins(std::vector<double>{1.0, 2.0}) == kMinBins);

  const Histogram flat = make_histogram(std::vector<double>{2.0, 2.0});
  CHECK(flat.bin_edges.front() < 2.0);
  CHECK(flat.bin_edges.back() > 2.0);
  CHECK_THROWS_AS(make_histogram(std::vector<double>{}), DomainError);
  CHECK_THROWS_AS(make_histogram(std::vector<double>{1.0, NAN}), DomainError);
}

TEST_CASE("scaled histogram") {
  const auto draws = ig_draws({3.2, 16.0}, 5000, 4);
  const Histogram a = make_histogram(draws);
  const Histogram b = scaled_histogram(draws, 1.0);
  CHECK(a.bin_edges == b.bin_edges);
  CHECK(a.counts == b.counts);
  CHECK_THROWS_AS(scaled_histogram(draws, 0.0), DomainError);

  // IG samples divided by c and rescaled by gamma = c are again IG(mu, lambda).
  const double c = 40.0;
  auto shrunk = draws;
  for (auto& x : shrunk) x /= c;
  const Histogram s = scaled_histogram(shrunk, c);
  std::vector<double> back;
  for (double x : shrunk) back.push_back(c * x);
  const double d = ks_statistic(back, [](double t) { return ig_cdf(t, {3.2, 16.0}); });
  CHECK(d < ks_critical_value(back.size(), 0.01));
  CHECK(overlap(s, a) > 0.999);
}

TEST_CASE("overlap") {
  const Histogram h = make_histogram(ig_draws({2.0, 5.0}, 3000, 8));
  CHECK(overlap(h, h) == doctest::Approx(1.0).epsilon(1e-14));
  const Histogram left = make_histogram(std::vector<double>{0.0, 0.5, 1.0}, std::vector<double>{0.0, 1.0, 2.0});
  const Histogram right = make_histogram(std::vector<double>{5.0, 5.5, 6.0}, std::vector<double>{5.0, 6.0, 7.0});
  CHECK(overlap(left, right) == 0.0);

  const Histogram g = make_histogram(gumbel_draws({2.0, 1.0}, 3000, 13));
  const double o = overlap(h, g);
  CHECK(o > 0.0);
  CHECK(o < 1.0);
  CHECK(overlap(g, h) == doctest::Approx(o).epsilon(1e-12));

  Histogram empty = left;
  empty.counts.assign(empty.counts.size(), 0);
  empty.total = 0;
  CHECK_THROWS_AS(overlap(empty, h), DomainError);
}

TEST_CASE("s ratio") {
  CHECK(s_ratio({3.2, 16.0}) == doctest::Approx(1.5625).epsilon(1e-14));
  CHECK(s_ratio({1.0, 1.0}) == 1.0);
  for (IGParams p : {IGParams{0.3, 2.0}, IGParams{7.0, 1.5}}) {
    const Moments m = ig_moments(p);
    CHECK(s_ratio(p) * m.variance == doctest::Approx(m.mean).epsilon(1e-14));
  }
}

TEST_CASE("regime classification") {
  CHECK(classify_regime(3.2) == Regime::weak);
  CHECK(classify_regime(0.1) == Regime::strong);
  CHECK(classify_regime(0.5) == Regime::transient);
  CHECK(classify_regime(1.0) == Regime::transient);
  CHECK(classify_regime(0.25) == Regime::transient);
  CHECK(regime_name(Regime::weak) == "weak");
  CHECK(regime_name(Regime::strong) == "strong");
  CHECK(regime_name(Regime::transient) == "transient");
}

TEST_CASE("s versus gamma") {
  const std::vector<std::pair<double, double>> exact{{0.1, 0.2}, {0.3, 0.6}, {1.0, 2.0}};
  const LinearFit w = fit_s_vs_gamma(exact, Regime::weak);
  CHECK(w.slope == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(w.intercept == 0.0);
  CHECK(w.residual == doctest::Approx(0.0).scale(1.0));

  const std::vector<std::pair<double, double>> line{{30.0, 0.71 * 30 + 2.86}, {100.0, 0.71 * 100 + 2.86}};
  const LinearFit s = fit_s_vs_gamma(line, Regime::strong);
  CHECK(s.slope == doctest::Approx(0.71).epsilon(1e-12));
  CHECK(s.intercept == doctest::Approx(2.86).epsilon(1e-10));

  CHECK_THROWS_AS(fit_s_vs_gamma(std::vector<std::pair<double, double>>{{1.0, 1.0}}, Regime::weak), FitError);
  CHECK_THROWS_AS(fit_s_vs_gamma(exact, Regime::transient), FitError);
}

TEST_CASE("kolmogorov-smirnov statistic") {
  const IGParams p{3.2, 16.0};
  const auto cdf = [&](double t) { return ig_cdf(t, p); };
  const auto draws = ig_draws(p, 10000, 21);
  CHECK(ks_statistic(draws, cdf) < 1.63 / std::sqrt(10000.0));
  CHECK(ks_critical_value(10000, 0.01) == doctest::Approx(1.6276 / 100.0).epsilon(1e-4));

  // Sample at the median of a fitted normal-like cdf.
  const auto logistic = [](double x) { return 1.0 / (1.0 + std::exp(-x)); };
  CHECK(ks_statistic(std::vector<double>{0.0}, logistic) == doctest::Approx(0.5));
  CHECK(ks_statistic(std::vector<double>{1e300, 1e300}, logistic) == doctest::Approx(1.0));
  CHECK(ks_statistic(std::vector<double>{}, logistic) == 0.0);
}

TEST_CASE("passage analysis") {
  const auto draws = ig_draws({3.2, 16.0}, 10000, 30);
  const PassageAnalysis a = analyze_passage_times(draws, 0);
  CHECK(a.valid);
  REQUIRE(a.ig_lsq);
  REQUIRE(a.ig_mle);
  REQUIRE(a.gumbel_lsq);
  CHECK(a.errors.empty());
  CHECK(a.ig_lsq_quality->residual_sum < a.gumbel_lsq_quality->residual_sum);

  const PassageAnalysis excluded = analyze_passage_times(draws, 600);
  CHECK_FALSE(excluded.valid);
  CHECK_FALSE(excluded.warnings.empty());
  CHECK(excluded.n_excluded == 600);

  const PassageAnalysis zero = analyze_passage_times(std::vector<double>(50, 0.0), 0);
  CHECK_FALSE(zero.ig_mle);
  CHECK_FALSE(zero.errors.empty());
}
