// Copyright 2026 The srpass Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace srpass {

// Critical time separating the strong-pulse (Kapitza-Dirac) and weak-pulse
// (Bragg) regimes, in units of 1/(2 omega_r).
inline constexpr double kCriticalTime = 0.5;

// Physical and numerical parameters of one simulation.  All lengths are in
// units of 1/k_l and all times in units of 1/(2 omega_r).  The light-matter
// coupling enters only through the superradiant gain; the individual coupling
// and speed of light are never needed by the dynamics.
struct ModelConfig {
  double gamma = 1.0;         // superradiant gain kappa^2 N / chi
  double n_atoms = 1.0e6;     // condensate atom number N
  double lambda_len = 1046.5; // condensate length k_l L (130 um at k_l = 8.05e6 /m)
  std::size_t grid_points = 400;
  std::optional<double> dtau;     // unset: 1e-3 / gamma
  std::optional<double> tau_max;  // unset: 60 / gamma
  bool backward_enabled = true;
  std::uint64_t rng_seed = 20110101;

  double time_step() const;
  double horizon() const;
  double grid_spacing() const { return lambda_len / static_cast<double>(grid_points); }

  // Throws ConfigError when an invariant is violated.
  void validate() const;
};

double default_time_step(double gamma);
double default_horizon(double gamma);

// Cell-centred uniform grid over [0, lambda_len].
class Grid {
 public:
  Grid(double length, std::size_t points);

  std::span<const double> xi() const { return xi_; }
  double dxi() const { return dxi_; }
  double length() const { return length_; }
  std::size_t size() const { return xi_.size(); }

 private:
  std::vector<double> xi_;
  double dxi_;
  double length_;
};

// |psi_0(xi)|^2 of the Thomas-Fermi condensate, 6 N (L xi - xi^2) / L^3 on
// [0, L] and zero outside.
double thomas_fermi_density(double xi, const ModelConfig& cfg);

// Condensate density sampled on the grid together with its running integral
// rho(xi).  The Thomas-Fermi profile uses the closed-form antiderivative;
// any other profile falls back to trapezoidal quadrature of the density.
class CondensateProfile {
 public:
  using DensityFn = std::function<double(double)>;

  static CondensateProfile thomas_fermi(const ModelConfig& cfg, const Grid& grid);
  static CondensateProfile custom(DensityFn density, const Grid& grid);

  std::span<const double> density() const { return density_; }    // per grid point
  std::span<const double> amplitude() const { return amplitude_; }  // sqrt(density)
  std::span<const double> cumulative() const { return cumulative_; }  // rho at grid points
  double length() const { return length_; }
  double total() const { return total_; }
  double density_at(double xi) const;

  // rho(xi); throws DomainError outside [0, length].
  double cumulative_at(double xi) const;

 private:
  CondensateProfile() = default;

  DensityFn density_fn_;
  bool analytic_ = false;
  double n_atoms_ = 0.0;
  double length_ = 0.0;
  double total_ = 0.0;
  // Fine trapezoid table for non-analytic profiles.
  std::vector<double> table_xi_;
  std::vector<double> table_rho_;
  std::vector<double> density_;
  std::vector<double> amplitude_;
  std::vector<double> cumulative_;
};

double cumulative_density(const CondensateProfile& profile, double xi);

// Bundles a validated configuration with its grid and profile.  Immutable and
// safe to share across trajectory workers.
class Model {
 public:
  explicit Model(ModelConfig cfg);
  Model(ModelConfig cfg, CondensateProfile::DensityFn density);

  const ModelConfig& config() const { return cfg_; }
  const Grid& grid() const { return grid_; }
  const CondensateProfile& profile() const { return profile_; }

  double coupling() const { return cfg_.gamma / cfg_.n_atoms; }  // Gamma / N

 private:
  ModelConfig cfg_;
  Grid grid_;
  CondensateProfile profile_;
};

// Unit conversion helpers.  Nothing in the dynamics depends on these.
struct PhysicalInputs {
  double wavenumber = 8.05e6;          // k_l [1/m]
  double atomic_mass = 1.443160648e-25;  // 87Rb [kg]
  double length = 130e-6;              // L [m]
};

struct PhysicalConstants {
  double recoil_frequency;  // omega_r = hbar k_l^2 / 2M [1/s]
  double light_speed;       // chi = c k_l / 2 omega_r
  double length;            // Lambda = k_l L
  double time_unit;         // 1 / (2 omega_r) [s]
};

PhysicalConstants derived_physical_constants(const PhysicalInputs& in);

}  // namespace srpass
