// Copyright 2026 The srpass Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>

namespace srpass::bessel {

// Bessel functions of the first kind for real x >= 0.  Power series below
// x = 12, Hankel asymptotic expansion above.
double j0(double x);
double j1(double x);

// J1(x) / x, finite at x = 0 (limit 1/2).
double j1_over_x(double x);

// Exponentially scaled modified Bessel functions e^{-x} I_n(x), x >= 0.
// Power series below x = 30, large-argument expansion above.
double i0e(double x);
double i1e(double x);

// e^{-x} I1(x) / x, finite at x = 0 (limit 1/2).
double i1e_over_x(double x);

inline double i0(double x) { return std::exp(x) * i0e(x); }
inline double i1(double x) { return std::exp(x) * i1e(x); }

}  // namespace srpass::bessel
