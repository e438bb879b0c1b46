// Copyright 2026 The srpass Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "srpass/model.hpp"
#include "srpass/rng.hpp"

namespace srpass {

using Complex = std::complex<double>;

// Matter and light amplitudes of one semiclassical trajectory.  The end-fire
// field is slaved to the matter fields and is recomputed, never evolved.
struct FieldState {
  std::vector<Complex> psi_plus;   // psi_{+1}(xi)
  std::vector<Complex> psi_minus;  // psi'_{-1}(xi) = e^{-2i tau} psi_{-1}(xi)
  std::vector<Complex> e_field;    // E(xi) = kappa e_+(xi)
  double tau = 0.0;
};

// Vacuum seeding: psi_plus[i] = (g1 + i g2) / sqrt(2 dxi) with standard
// normal g1, g2, so that <|psi_plus|^2> dxi = 1.  The backward mode and the
// field start at zero.
FieldState seed_trajectory(const Grid& grid, Rng& rng);

// Same seeding, with e_field filled in for the given model.
FieldState seed_trajectory(const Model& model, Rng& rng);

// E(xi) = -i (Gamma/N) int_0^xi psi_0 [conj(psi_plus) + psi_minus] dxi'.
// On the cell-centred grid the integral up to xi_i is the full cells j < i
// plus half of cell i.  The psi_minus term is dropped when the backward mode
// is disabled.
std::vector<Complex> slaved_field(const FieldState& state, const Model& model);

// E at the far end xi = Lambda (all cells).
Complex end_field(const FieldState& state, const Model& model);

// Photon flux leaving the condensate, (N/Gamma) |E(Lambda)|^2.
double emitted_flux(const FieldState& state, const Model& model);

// One RK4 step of dtau (time_step() unless given).  The -2i rotation of the
// backward mode is applied exactly through an integrating factor.  Throws
// TrajectoryError on non-finite amplitudes.
FieldState step(const FieldState& state, const Model& model);
FieldState step(const FieldState& state, const Model& model, double dtau);

struct SeriesPoint {
  double tau;
  double n_emitted;
  double flux;
};

struct TrajectoryOptions {
  bool record_series = false;
  std::size_t series_stride = 1;
  // Keep integrating to tau_max after the last threshold (for series dumps).
  bool run_to_horizon = false;
  std::uint64_t index = 0;  // reported in TrajectoryError
};

struct TrajectoryResult {
  std::vector<std::optional<double>> passage_times;  // one per threshold
  std::vector<SeriesPoint> series;
  std::size_t steps = 0;
  double n_emitted = 0.0;  // counter at the last time level visited
};

// Integrates one trajectory from a fresh seed and records the first time the
// emitted photon number N(tau) = int_0^tau (N/Gamma)|E(Lambda)|^2 reaches each
// threshold.  N is accumulated with the trapezoid rule and crossings are
// interpolated linearly between time levels.  Thresholds never reached by
// tau_max are left empty.  thresholds must be ascending and nonnegative.
TrajectoryResult run_trajectory(const Model& model, std::uint64_t trajectory_seed,
                                std::span<const double> thresholds, const TrajectoryOptions& options = {});

// Number of time levels after level 0 up to and including tau_max.
std::size_t horizon_steps(const ModelConfig& cfg);

// Throws ConfigError unless thresholds are nonempty, nonnegative and
// strictly ascending.
void validate_thresholds(std::span<const double> thresholds);

}  // namespace srpass
