// Copyright 2026 The srpass Authors
// SPDX-License-Identifier: Apache-2.0

// Shared RK4 update for the scalar and the vectorised integrators.  V is
// either double or a GCC vector of doubles; both instantiations perform the
// same IEEE operations in the same order, so a lane of the vector engine
// reproduces the scalar trajectory bit for bit.

#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace srpass::detail {

// Per-grid-point weights and per-step rotation factors.
struct StepCoefficients {
  std::vector<double> weight;    // psi_0(xi_i) * dxi
  std::vector<double> gain;      // (Gamma/N) * psi_0(xi_i)
  double dtau = 0.0;
  double half_cos = 1.0, half_sin = 0.0;  // e^{-i dtau}
  double full_cos = 1.0, full_sin = 0.0;  // e^{-2i dtau}

  StepCoefficients() = default;
  StepCoefficients(std::vector<double> amplitude, double dxi, double coupling, double dt)
      : weight(amplitude.size()), gain(amplitude.size()), dtau(dt) {
    for (std::size_t i = 0; i < amplitude.size(); ++i) {
      weight[i] = amplitude[i] * dxi;
      gain[i] = coupling * amplitude[i];
    }
    half_cos = std::cos(-dt);
    half_sin = std::sin(-dt);
    full_cos = std::cos(-2.0 * dt);
    full_sin = std::sin(-2.0 * dt);
  }
};

// One RK4 step of
//
//   da/dt = g psi_0 C,   db/dt = -g psi_0 C - 2i b,
//   C(xi_i) = sum_{j<i} s_j dxi + s_i dxi / 2,   s = psi_0 (a + b),
//
// for a = conj(psi_+1) and b = psi'_-1, with b integrated in the frame
// rotating at e^{-2i t}.  The four stages are fused into a single sweep over
// the grid: stage k at point i depends only on stage k-1 at the same point
// and on the running source sums.  On return total_{r,i} hold sum_j s_j dxi
// of the state before the step.
template <class V, bool Backward>
void rk4_step(const StepCoefficients& c, std::size_t n, V* __restrict ar, V* __restrict ai,
              V* __restrict br, V* __restrict bi, V& total_r, V& total_i) {
  const double dt = c.dtau;
  const double hs[4] = {0.0, 0.5 * dt, 0.5 * dt, dt};
  const double rc[4] = {1.0, c.half_cos, c.half_cos, c.full_cos};
  const double rs[4] = {0.0, c.half_sin, c.half_sin, c.full_sin};
  const double ws[4] = {1.0, 2.0, 2.0, 1.0};
  V acc_r[4] = {}, acc_i[4] = {};

  for (std::size_t i = 0; i < n; ++i) {
    const double w = c.weight[i];
    const double g = c.gain[i];
    const V a_r = ar[i], a_i = ai[i];
    V b_r = {}, b_i = {};
    if constexpr (Backward) {
      b_r = br[i];
      b_i = bi[i];
    }
    V kr = {}, ki = {}, kbr = {}, kbi = {};
    V sr = {}, si = {}, sbr = {}, sbi = {};
#pragma GCC unroll 4
    for (int s = 0; s < 4; ++s) {
      const double h = hs[s];
      const V xr = a_r + h * kr, xi = a_i + h * ki;
      V yr = {}, yi = {};
      if constexpr (Backward) {
        const V ur = b_r + h * kbr, ui = b_i + h * kbi;
        yr = rc[s] * ur - rs[s] * ui;
        yi = rc[s] * ui + rs[s] * ur;
      }
      const V src_r = w * (xr + yr), src_i = w * (xi + yi);
      const V cr = acc_r[s] + 0.5 * src_r, ci = acc_i[s] + 0.5 * src_i;
      acc_r[s] += src_r;
      acc_i[s] += src_i;
      kr = g * cr;
      ki = g * ci;
      sr += ws[s] * kr;
      si += ws[s] * ki;
      if constexpr (Backward) {
        // Back into the rotating frame: multiply by e^{+2ih}.
        kbr = -(rc[s] * kr + rs[s] * ki);
        kbi = -(rc[s] * ki - rs[s] * kr);
        sbr += ws[s] * kbr;
        sbi += ws[s] * kbi;
      }
    }
    ar[i] = a_r + (dt / 6.0) * sr;
    ai[i] = a_i + (dt / 6.0) * si;
    if constexpr (Backward) {
      const V ur = b_r + (dt / 6.0) * sbr, ui = b_i + (dt / 6.0) * sbi;
      br[i] = c.full_cos * ur - c.full_sin * ui;
      bi[i] = c.full_cos * ui + c.full_sin * ur;
    }
  }
  total_r = acc_r[0];
  total_i = acc_i[0];
}

}  // namespace srpass::detail
