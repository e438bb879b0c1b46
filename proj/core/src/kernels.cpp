// Copyright 2026 The srpass Authors
// SPDX-License-Identifier: Apache-2.0

#include "srpass/kernels.hpp"

#include <cmath>
#include <numbers>

#include "srpass/bessel.hpp"
#include "srpass/error.hpp"
#include "srpass/quadrature.hpp"

namespace srpass {

namespace {

using cd = std::complex<double>;
namespace bs = srpass::bessel;

// Oscillation period of e^{-2iz'} is pi; keep every panel well inside it.
constexpr double kMaxPanel = std::numbers::pi / 10.0;

cd phase(double z) { return {std::cos(2.0 * z), -std::sin(2.0 * z)}; }  // e^{-2iz}

// Closed-form part and integrand of each kernel, both scaled by e^{-X},
// X = 2 sqrt(yz).  With u = 2 sqrt(y(z-z')) and v = 2 sqrt(y z'):
//
//   F10 = I0(X) - 2y int e^{-2iz'} I0(u) J1(v)/v
//   F01 = e^{-2iz} J0(X) + 2y int e^{-2iz'} I1(u)/u J0(v)
//   F11 = int e^{-2iz'} I0(u) J0(v)
//   F20 = 2z I1(X)/X - int e^{-2iz'} u I1(u) J1(v)/v
//   F02 = e^{-2iz} 2z J1(X)/X + int e^{-2iz'} I1(u)/u v J1(v)
struct Parts {
  cd closed;
  double weight;  // prefactor of the integral
};

Parts closed_part(KernelKind kind, double y, double z, double X) {
  const double damp = std::exp(-X);
  switch (kind) {
    case KernelKind::F10: return {bs::i0e(X), -2.0 * y};
    case KernelKind::F01: return {phase(z) * (bs::j0(X) * damp), 2.0 * y};
    case KernelKind::F11: return {0.0, 1.0};
    case KernelKind::F20: return {2.0 * z * bs::i1e_over_x(X), -1.0};
    case KernelKind::F02: return {phase(z) * (2.0 * z * bs::j1_over_x(X) * damp), 1.0};
  }
  return {0.0, 0.0};
}

double radial(KernelKind kind, double u, double v, double X) {
  const double g = std::exp(u - X);
  switch (kind) {
    case KernelKind::F10: return g * bs::i0e(u) * bs::j1_over_x(v);
    case KernelKind::F01: return g * bs::i1e_over_x(u) * bs::j0(v);
    case KernelKind::F11: return g * bs::i0e(u) * bs::j0(v);
    case KernelKind::F20: return g * u * bs::i1e(u) * bs::j1_over_x(v);
    case KernelKind::F02: return g * bs::i1e_over_x(u) * v * bs::j1(v);
  }
  return 0.0;
}

}  // namespace

ScaledKernel kernel_scaled(KernelKind kind, double y, double z, double rel_tol) {
  if (!(y >= 0.0) || !(z >= 0.0) || !std::isfinite(y) || !std::isfinite(z)) {
    throw DomainError("kernel arguments must be finite and nonnegative");
  }
  const double X = 2.0 * std::sqrt(y * z);
  const Parts parts = closed_part(kind, y, z, X);
  ScaledKernel out{parts.closed, X};
  if (z == 0.0 || parts.weight == 0.0) return out;

  auto integrand = [&](double zp) {
    const double u = 2.0 * std::sqrt(y * std::max(z - zp, 0.0));
    const double v = 2.0 * std::sqrt(y * zp);
    return phase(zp) * radial(kind, u, v, X);
  };
  quad::Tolerance tol;
  tol.relative = rel_tol;
  tol.absolute = 1e-3 * rel_tol * std::abs(parts.closed) / std::abs(parts.weight);
  tol.max_panel = kMaxPanel;
  const auto r = quad::integrate(integrand, 0.0, z, tol);
  out.mantissa += parts.weight * r.value;
  return out;
}

cd kernel_F10(double y, double z) { return kernel_scaled(KernelKind::F10, y, z).value(); }
cd kernel_F01(double y, double z) { return kernel_scaled(KernelKind::F01, y, z).value(); }
cd kernel_F11(double y, double z) { return kernel_scaled(KernelKind::F11, y, z).value(); }
cd kernel_F20(double y, double z) { return kernel_scaled(KernelKind::F20, y, z).value(); }
cd kernel_F02(double y, double z) { return kernel_scaled(KernelKind::F02, y, z).value(); }

double quantum_photon_flux(double xi, double tau, const Model& model, double rel_tol) {
  const auto& profile = model.profile();
  if (!(tau >= 0.0) || !std::isfinite(tau)) throw DomainError("tau must be finite and nonnegative");
  const double rho_xi = profile.cumulative_at(xi);  // validates xi
  const double g = model.coupling();
  auto integrand = [&](double xp) {
    const double d = profile.density_at(xp);
    if (d == 0.0) return 0.0;
    const double y = g * std::max(rho_xi - profile.cumulative_at(xp), 0.0);
    return d * kernel_scaled(KernelKind::F10, y, tau, 0.1 * rel_tol).norm();
  };
  quad::Tolerance tol;
  tol.relative = rel_tol;
  tol.max_panel = profile.length() / 16.0;
  return g * quad::integrate(integrand, 0.0, xi, tol).value;
}

std::vector<double> quantum_flux_profile(double tau, const Model& model, double rel_tol) {
  std::vector<double> out;
  out.reserve(model.grid().size());
  for (double x : model.grid().xi()) out.push_back(quantum_photon_flux(x, tau, model, rel_tol));
  return out;
}

double quantum_emitted_photons(double tau, const Model& model, double rel_tol) {
  if (!(tau >= 0.0) || !std::isfinite(tau)) throw DomainError("tau must be finite and nonnegative");
  const double L = model.profile().length();
  auto m = [&](double t) { return quantum_photon_flux(L, t, model, 0.1 * rel_tol); };
  quad::Tolerance tol;
  tol.relative = rel_tol;
  return quad::integrate(m, 0.0, tau, tol).value;
}

}  // namespace srpass
