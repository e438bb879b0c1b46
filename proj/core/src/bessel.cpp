// Copyright 2026 The srpass Authors
// SPDX-License-Identifier: Apache-2.0

#include "srpass/bessel.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "srpass/error.hpp"

namespace srpass::bessel {

namespace {

constexpr double kJSeriesLimit = 8.0;
constexpr double kJRecurrenceLimit = 25.0;
constexpr double kISeriesLimit = 30.0;
constexpr double kEps = 1e-17;

void check_argument(double x) {
  if (!(x >= 0.0)) throw DomainError("Bessel argument must be nonnegative");
}

// sum_k s^k (x/2)^{2k} / (k! (k+n)!), without the (x/2)^n / n! prefactor
// folded in: returns sum_k s^k q^k / (k! (k+n)!) with q = x^2/4.
double power_series(double q, int n, double sign) {
  double term = 1.0;
  for (int j = 1; j <= n; ++j) term /= j;
  double sum = term;
  for (int k = 1; k < 200; ++k) {
    term *= sign * q / (static_cast<double>(k) * static_cast<double>(k + n));
    sum += term;
    if (std::abs(term) <= kEps * std::abs(sum)) break;
  }
  return sum;
}

// Hankel expansion, J_nu(x) for large x.
double hankel_j(int nu, double x) {
  const double mu = 4.0 * nu * nu;
  double p = 0.0, q = 0.0;
  double term = 1.0;
  double prev = HUGE_VAL;
  for (int k = 0; k < 60; ++k) {
    if (k > 0) term *= (mu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * k * x);
    const double mag = std::abs(term);
    if (mag > prev) break;  // asymptotic series starts to diverge
    prev = mag;
    const double signed_term = ((k / 2) % 2 == 0) ? term : -term;
    if (k % 2 == 0) {
      p += signed_term;
    } else {
      q += signed_term;
    }
    if (mag < kEps) break;
  }
  const double omega = x - (0.5 * nu + 0.25) * std::numbers::pi;
  return std::sqrt(2.0 / (std::numbers::pi * x)) * (p * std::cos(omega) - q * std::sin(omega));
}

// Miller's backward recurrence normalised by J0 + 2 sum J_{2k} = 1; returns
// {J0, J1}.  Accurate to a few ulps of 1 for moderate x.
std::pair<double, double> miller_j01(double x) {
  const int start = 2 * (static_cast<int>(1.5 * x + 40.0) / 2);
  double next = 0.0, cur = 1e-300, norm = 0.0;
  double j0 = 0.0, j1 = 0.0;
  for (int k = start; k > 0; --k) {
    const double prev = 2.0 * k / x * cur - next;
    next = cur;
    cur = prev;  // J_{k-1} up to scale
    if (k - 1 == 1) j1 = cur;
    if (k - 1 == 0) j0 = cur;
    if ((k - 1) % 2 == 0 && k - 1 > 0) norm += 2.0 * cur;
    if (std::abs(cur) > 1e250) {
      next *= 1e-250;
      cur *= 1e-250;
      norm *= 1e-250;
      j1 *= 1e-250;
    }
  }
  norm += j0;
  return {j0 / norm, j1 / norm};
}

// e^{-x} I_nu(x) for large x.
double asymptotic_ie(int nu, double x) {
  const double mu = 4.0 * nu * nu;
  double sum = 1.0;
  double term = 1.0;
  double prev = 1.0;
  for (int k = 1; k < 60; ++k) {
    term *= -(mu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * k * x);
    const double mag = std::abs(term);
    if (mag > prev) break;
    prev = mag;
    sum += term;
    if (mag < kEps) break;
  }
  return sum / std::sqrt(2.0 * std::numbers::pi * x);
}

}  // namespace

double j0(double x) {
  check_argument(x);
  if (x < kJSeriesLimit) return power_series(0.25 * x * x, 0, -1.0);
  if (x < kJRecurrenceLimit) return miller_j01(x).first;
  return hankel_j(0, x);
}

double j1(double x) {
  check_argument(x);
  if (x < kJSeriesLimit) return 0.5 * x * power_series(0.25 * x * x, 1, -1.0);
  if (x < kJRecurrenceLimit) return miller_j01(x).second;
  return hankel_j(1, x);
}

double j1_over_x(double x) {
  check_argument(x);
  if (x < kJSeriesLimit) return 0.5 * power_series(0.25 * x * x, 1, -1.0);
  return j1(x) / x;
}

double i0e(double x) {
  check_argument(x);
  if (x < kISeriesLimit) return std::exp(-x) * power_series(0.25 * x * x, 0, 1.0);
  return asymptotic_ie(0, x);
}

double i1e(double x) {
  check_argument(x);
  if (x < kISeriesLimit) return std::exp(-x) * 0.5 * x * power_series(0.25 * x * x, 1, 1.0);
  return asymptotic_ie(1, x);
}

double i1e_over_x(double x) {
  check_argument(x);
  if (x < kISeriesLimit) return std::exp(-x) * 0.5 * power_series(0.25 * x * x, 1, 1.0);
  return asymptotic_ie(1, x) / x;
}

}  // namespace srpass::bessel
