// Copyright 2026 The srpass Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <vector>

#include "srpass/model.hpp"

namespace srpass {

// Bessel-convolution kernels
//
//   F_{mu,nu}(y, z) = InverseLaplace_{p -> z} [ e^{y/p} e^{-y/(p+2i)} / (p^mu (p+2i)^nu) ],
//
// evaluated from their closed forms in J0, J1, I0, I1 plus one oscillatory
// integral over [0, z].  The exponentially growing factor e^{2 sqrt(yz)} is
// split off so that large couplings do not overflow before the caller needs
// the full value.
enum class KernelKind { F10, F01, F11, F20, F02 };

struct ScaledKernel {
  std::complex<double> mantissa;
  double log_scale = 0.0;  // value = mantissa * exp(log_scale)

  std::complex<double> value() const { return mantissa * std::exp(log_scale); }
  double norm() const { return std::norm(mantissa) * std::exp(2.0 * log_scale); }
};

inline constexpr double kKernelTolerance = 1e-8;

// Throws DomainError for negative or non-finite arguments.
ScaledKernel kernel_scaled(KernelKind kind, double y, double z, double rel_tol = kKernelTolerance);

std::complex<double> kernel_F10(double y, double z);
std::complex<double> kernel_F01(double y, double z);
std::complex<double> kernel_F11(double y, double z);
std::complex<double> kernel_F20(double y, double z);
std::complex<double> kernel_F02(double y, double z);

inline constexpr double kFluxTolerance = 1e-6;

// Vacuum-seeded photon flux m(xi, tau) = chi n(xi, tau):
//
//   m = (Gamma/N) int_0^xi dxi' |psi_0(xi')|^2 |F10(gamma_{xi,xi'}, tau)|^2,
//   gamma_{xi,xi'} = (Gamma/N) [rho(xi) - rho(xi')].
//
// At xi = Lambda this is the rate at which photons leave the condensate.
double quantum_photon_flux(double xi, double tau, const Model& model, double rel_tol = kFluxTolerance);

// m(xi_i, tau) at every grid point.
std::vector<double> quantum_flux_profile(double tau, const Model& model, double rel_tol = kFluxTolerance);

// Emitted photon number N(tau) = int_0^tau m(Lambda, tau') dtau'.
double quantum_emitted_photons(double tau, const Model& model, double rel_tol = kFluxTolerance);

}  // namespace srpass
