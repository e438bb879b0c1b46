// Copyright 2026 The srpass Authors
// SPDX-License-Identifier: Apache-2.0

#include "srpass/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "srpass/error.hpp"

namespace srpass {

namespace {

constexpr double kHbar = 1.054571817e-34;
constexpr double kSpeedOfLight = 299792458.0;
constexpr std::size_t kProfileTableSize = 200000;

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw ConfigError(std::string(name) + " must be finite and > 0");
  }
}

}  // namespace

double default_time_step(double gamma) { return 1.0e-3 / gamma; }

double default_horizon(double gamma) { return 60.0 / gamma; }

double ModelConfig::time_step() const { return dtau ? *dtau : default_time_step(gamma); }

double ModelConfig::horizon() const { return tau_max ? *tau_max : default_horizon(gamma); }

void ModelConfig::validate() const {
  require_positive(gamma, "gamma");
  require_positive(n_atoms, "n_atoms");
  require_positive(lambda_len, "lambda_len");
  if (grid_points < 2) throw ConfigError("grid_points must be >= 2");
  if (dtau) require_positive(*dtau, "dtau");
  if (tau_max) require_positive(*tau_max, "tau_max");
  require_positive(grid_spacing(), "grid spacing");
}

Grid::Grid(double length, std::size_t points)
    : xi_(points), dxi_(length / static_cast<double>(points)), length_(length) {
  for (std::size_t i = 0; i < points; ++i) {
    xi_[i] = (static_cast<double>(i) + 0.5) * dxi_;
  }
}

double thomas_fermi_density(double xi, const ModelConfig& cfg) {
  const double L = cfg.lambda_len;
  if (xi <= 0.0 || xi >= L) return 0.0;
  return 6.0 * cfg.n_atoms * (L * xi - xi * xi) / (L * L * L);
}

CondensateProfile CondensateProfile::thomas_fermi(const ModelConfig& cfg, const Grid& grid) {
  CondensateProfile p;
  p.analytic_ = true;
  p.n_atoms_ = cfg.n_atoms;
  p.length_ = cfg.lambda_len;
  p.total_ = cfg.n_atoms;
  p.density_fn_ = [cfg](double xi) { return thomas_fermi_density(xi, cfg); };
  for (double x : grid.xi()) {
    const double d = thomas_fermi_density(x, cfg);
    p.density_.push_back(d);
    p.amplitude_.push_back(std::sqrt(d));
    p.cumulative_.push_back(p.cumulative_at(x));
  }
  return p;
}

CondensateProfile CondensateProfile::custom(DensityFn density, const Grid& grid) {
  CondensateProfile p;
  p.analytic_ = false;
  p.length_ = grid.length();
  p.density_fn_ = std::move(density);

  const std::size_t n = kProfileTableSize;
  const double h = p.length_ / static_cast<double>(n);
  p.table_xi_.resize(n + 1);
  p.table_rho_.resize(n + 1);
  double prev = p.density_fn_(0.0);
  if (prev < 0.0) throw DomainError("condensate density must be nonnegative");
  p.table_rho_[0] = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    const double x = h * static_cast<double>(i);
    const double d = p.density_fn_(x);
    if (d < 0.0) throw DomainError("condensate density must be nonnegative");
    p.table_xi_[i] = x;
    p.table_rho_[i] = p.table_rho_[i - 1] + 0.5 * h * (prev + d);
    prev = d;
  }
  p.total_ = p.table_rho_.back();
  p.n_atoms_ = p.total_;
  for (double x : grid.xi()) {
    const double d = p.density_fn_(x);
    p.density_.push_back(d);
    p.amplitude_.push_back(std::sqrt(d));
    p.cumulative_.push_back(p.cumulative_at(x));
  }
  return p;
}

double CondensateProfile::density_at(double xi) const { return density_fn_(xi); }

double CondensateProfile::cumulative_at(double xi) const {
  if (!(xi >= 0.0 && xi <= length_)) {
    throw DomainError("cumulative density requested outside [0, length]");
  }
  if (analytic_) {
    const double u = xi / length_;
    return n_atoms_ * u * u * (3.0 - 2.0 * u);
  }
  // Trapezoid table plus an exact trapezoid over the partial cell.
  const double h = table_xi_[1];
  const auto i = std::min<std::size_t>(static_cast<std::size_t>(xi / h), table_rho_.size() - 2);
  const double x0 = h * static_cast<double>(i);
  const double d0 = density_fn_(x0);
  const double d1 = density_fn_(xi);
  return table_rho_[i] + 0.5 * (xi - x0) * (d0 + d1);
}

double cumulative_density(const CondensateProfile& profile, double xi) {
  return profile.cumulative_at(xi);
}

Model::Model(ModelConfig cfg)
    : cfg_((cfg.validate(), cfg)),
      grid_(cfg_.lambda_len, cfg_.grid_points),
      profile_(CondensateProfile::thomas_fermi(cfg_, grid_)) {}

Model::Model(ModelConfig cfg, CondensateProfile::DensityFn density)
    : cfg_((cfg.validate(), cfg)),
      grid_(cfg_.lambda_len, cfg_.grid_points),
      profile_(CondensateProfile::custom(std::move(density), grid_)) {}

PhysicalConstants derived_physical_constants(const PhysicalInputs& in) {
  if (!(in.wavenumber > 0.0) || !(in.atomic_mass > 0.0) || !(in.length > 0.0)) {
    throw DomainError("physical inputs must be positive");
  }
  PhysicalConstants out{};
  out.recoil_frequency = kHbar * in.wavenumber * in.wavenumber / (2.0 * in.atomic_mass);
  out.light_speed = kSpeedOfLight * in.wavenumber / (2.0 * out.recoil_frequency);
  out.length = in.wavenumber * in.length;
  out.time_unit = 1.0 / (2.0 * out.recoil_frequency);
  return out;
}

}  // namespace srpass
