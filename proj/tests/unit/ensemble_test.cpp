// Copyright 2026 The srpass Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <vector>

#include "doctest.h"
#include "srpass/distributions.hpp"
#include "srpass/dynamics.hpp"
#include "srpass/ensemble.hpp"
#include "srpass/error.hpp"
#include "srpass/kernels.hpp"
#include "srpass/rng.hpp"

using namespace srpass;

namespace {

double rel_l2(const std::vector<double>& a, const std::vector<double>& b) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num += (a[i] - b[i]) * (a[i] - b[i]);
    den += b[i] * b[i];
  }
  return std::sqrt(num / den);
}

}  // namespace

TEST_CASE("single trajectory at threshold zero") {
  EnsembleSpec spec;
  spec.n_traj = 1;
  spec.thresholds = {0.0};
  const auto r = run_ensemble(spec);
  REQUIRE(r.samples.size() == 1);
  CHECK(r.samples[0].trajectory_index == 0);
  CHECK(r.samples[0].time == 0.0);
  CHECK(r.aborted.empty());
}

TEST_CASE("ensemble spec validation") {
  EnsembleSpec spec;
  spec.thresholds = {10.0};
  spec.n_traj = 0;
  CHECK_THROWS_AS(spec.validate(), ConfigError);
  spec.n_traj = 5;
  spec.thresholds = {};
  CHECK_THROWS_AS(spec.validate(), ConfigError);
  spec.thresholds = {10.0, 5.0};
  CHECK_THROWS_AS(run_ensemble(spec), ConfigError);
}

TEST_CASE("ensemble equals independent trajectories for any thread count") {
  EnsembleSpec spec;
  spec.n_traj = 13;  // one full lane block and a partial one
  spec.thresholds = {2.0, 10.0, 15.0};
  spec.cfg.tau_max = 3.5;  // leaves some passages absent
  EnsembleOptions one;
  one.threads = 1;
  EnsembleOptions three;
  three.threads = 3;
  const auto a = run_ensemble(spec, one);
  const auto b = run_ensemble(spec, three);
  REQUIRE(a.samples.size() == spec.n_traj * spec.thresholds.size());
  REQUIRE(b.samples.size() == a.samples.size());

  const Model model(spec.cfg);
  std::size_t absent = 0;
  for (std::size_t i = 0; i < spec.n_traj; ++i) {
    const auto ref = run_trajectory(model, stream_seed(spec.cfg.rng_seed, i), spec.thresholds);
    for (std::size_t k = 0; k < spec.thresholds.size(); ++k) {
      const auto& sa = a.samples[i * spec.thresholds.size() + k];
      const auto& sb = b.samples[i * spec.thresholds.size() + k];
      CHECK(sa.trajectory_index == i);
      CHECK(sa.threshold == spec.thresholds[k]);
      CHECK(sa.time == ref.passage_times[k]);
      CHECK(sb.time == sa.time);
      if (!sa.time) ++absent;
      if (k > 0 && sa.time && a.samples[i * spec.thresholds.size() + k - 1].time) {
        CHECK(*sa.time >= *a.samples[i * spec.thresholds.size() + k - 1].time);
      }
    }
  }
  CHECK(absent > 0);
  CHECK(absent == a.absent(2) + a.absent(1) + a.absent(0));
  CHECK(a.times(0).size() + a.absent(0) == spec.n_traj);
}

TEST_CASE("weak-pulse passage times are positively skewed") {
  EnsembleSpec spec;
  spec.n_traj = 500;
  spec.thresholds = {10.0};
  const auto r = run_ensemble(spec);
  const auto t = r.times(0);
  REQUIRE(t.size() == 500);
  CHECK(sample_moments(t).skew > 0.3);
}

TEST_CASE("paired backward comparison") {
  EnsembleSpec spec;
  spec.n_traj = 9;
  spec.thresholds = {0.0};
  const auto z = compare_backward_onoff(spec);
  for (std::size_t i = 0; i < 9; ++i) {
    CHECK(z.enabled.samples[i].time == 0.0);
    CHECK(z.disabled.samples[i].time == 0.0);
  }

  spec.thresholds = {5.0};
  const auto c = compare_backward_onoff(spec);
  ModelConfig off = spec.cfg;
  off.backward_enabled = false;
  const Model m_on(spec.cfg), m_off(off);
  bool differ = false;
  for (std::size_t i = 0; i < spec.n_traj; ++i) {
    const std::uint64_t seed = stream_seed(spec.cfg.rng_seed, i);
    CHECK(c.enabled.samples[i].time == run_trajectory(m_on, seed, spec.thresholds).passage_times[0]);
    CHECK(c.disabled.samples[i].time == run_trajectory(m_off, seed, spec.thresholds).passage_times[0]);
    differ = differ || c.enabled.samples[i].time != c.disabled.samples[i].time;
  }
  CHECK(differ);
}

TEST_CASE("density at tau zero is the vacuum floor") {
  const Model m{ModelConfig{}};
  const std::size_t n = 400;
  const auto d = mc_photon_density(m, n, 0.0);
  CHECK(d.n_traj_used == n);
  CHECK(d.tau == 0.0);
  std::vector<double> floor;
  for (double rho : m.profile().cumulative()) floor.push_back(m.coupling() * rho);
  CHECK(rel_l2(d.mean_flux, floor) < 3.0 / std::sqrt(static_cast<double>(n)));
  for (double f : d.mean_flux) CHECK(f >= 0.0);
  CHECK_THROWS_AS(mc_photon_density(m, 0, 1.0), ConfigError);
  CHECK_THROWS_AS(mc_photon_density(m, 1, m.config().horizon() * 2.0), ConfigError);
}

TEST_CASE("density error scales as one over root n") {
  // Root-mean-square distance over independent replicates at each size.
  ModelConfig cfg;
  const Model ref_model(cfg);
  const double tau = 2.0;
  const auto oracle = quantum_flux_profile(tau, ref_model);
  auto rms = [&](std::size_t n, std::size_t reps) {
    double sum = 0.0;
    for (std::size_t r = 0; r < reps; ++r) {
      cfg.rng_seed = 1000 + 7919 * r + n;
      const double d = rel_l2(mc_photon_density(cfg, n, tau).mean_flux, oracle);
      sum += d * d;
    }
    return std::sqrt(sum / static_cast<double>(reps));
  };
  const double d20 = rms(20, 100);
  const double d200 = rms(200, 10);
  const double d2000 = rms(2000, 2);
  MESSAGE("rms distance n=20 " << d20 << ", n=200 " << d200 << ", n=2000 " << d2000);
  const double ideal = std::sqrt(10.0);
  CHECK(d20 / d200 > ideal / 1.5);
  CHECK(d20 / d200 < ideal * 1.5);
  CHECK(d200 / d2000 > ideal / 1.5);
  CHECK(d200 / d2000 < ideal * 1.5);
}
