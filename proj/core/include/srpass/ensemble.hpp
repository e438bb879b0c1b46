// Copyright 2026 The srpass Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "srpass/model.hpp"

namespace srpass {

struct EnsembleSpec {
  ModelConfig cfg;
  std::size_t n_traj = 10000;
  std::vector<double> thresholds;

  // Throws ConfigError.
  void validate() const;
};

struct PassageSample {
  std::uint64_t trajectory_index;
  double threshold;
  std::optional<double> time;  // empty: threshold not reached by tau_max
};

struct EnsembleOptions {
  unsigned threads = 0;               // 0: hardware concurrency
  double max_abort_fraction = 0.01;   // more aborted trajectories fail the run
  // Called from worker threads with the number of finished trajectories.
  std::function<void(std::size_t done, std::size_t total)> progress;
};

struct EnsembleResult {
  std::vector<double> thresholds;
  std::size_t n_traj = 0;
  // Sorted by trajectory index, then threshold.
  std::vector<PassageSample> samples;
  // Trajectories stopped on non-finite amplitudes; their samples are empty.
  std::vector<std::uint64_t> aborted;

  // Passage times recorded for threshold k, in trajectory order.
  std::vector<double> times(std::size_t k) const;
  std::size_t absent(std::size_t k) const;
};

// Runs n_traj independently seeded trajectories.  Trajectory i draws its seed
// from stream_seed(cfg.rng_seed, i), so the samples do not depend on the
// number of worker threads.  Throws EnsembleError when more than
// max_abort_fraction of the trajectories abort.
EnsembleResult run_ensemble(const EnsembleSpec& spec, const EnsembleOptions& options = {});
EnsembleResult run_ensemble(const Model& model, std::size_t n_traj, const std::vector<double>& thresholds,
                            const EnsembleOptions& options = {});

struct DensityAverage {
  std::vector<double> xi;
  std::vector<double> mean_flux;  // trajectory mean of (N/Gamma)|E(xi, tau)|^2
  std::size_t n_traj_used = 0;
  double tau = 0.0;
};

// Monte Carlo estimate of the photon flux profile m(xi, tau), in the units of
// quantum_photon_flux.  tau is reached in whole steps no longer than the
// configured time step.
DensityAverage mc_photon_density(const ModelConfig& cfg, std::size_t n_traj, double tau_snapshot,
                                 const EnsembleOptions& options = {});
DensityAverage mc_photon_density(const Model& model, std::size_t n_traj, double tau_snapshot,
                                 const EnsembleOptions& options = {});

struct BackwardComparison {
  EnsembleResult enabled;
  EnsembleResult disabled;
};

// Runs the ensemble with and without the backward side-mode on identical
// seed streams, so samples pair up by trajectory index.
BackwardComparison compare_backward_onoff(const EnsembleSpec& spec, const EnsembleOptions& options = {});

}  // namespace srpass
