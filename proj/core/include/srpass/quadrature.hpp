// Copyright 2026 The srpass Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <queue>
#include <vector>

namespace srpass::quad {

struct Tolerance {
  double relative = 1e-8;
  double absolute = 0.0;
  // Initial partition: no panel wider than this.
  double max_panel = HUGE_VAL;
  std::size_t max_panels = 4000;
};

template <class T>
struct Result {
  T value{};
  double error = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK qk15).
inline constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrod = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGauss = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const std::complex<double>& v) { return std::abs(v); }

template <class T>
struct Panel {
  double a, b;
  T value;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

template <class T, class F>
Panel<T> gk15(F& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const T fc = f(c);
  T kronrod = fc * kKronrod[7];
  T gauss = fc * kGauss[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kNodes[j];
    const T sum = f(c - dx) + f(c + dx);
    kronrod += sum * kKronrod[j];
    if (j % 2 == 1) gauss += sum * kGauss[j / 2];
  }
  return {a, b, kronrod * h, magnitude((kronrod - gauss) * h)};
}

}  // namespace detail

// Globally adaptive Gauss-Kronrod quadrature of a real- or complex-valued f
// over [a, b]: the panel with the largest error estimate is bisected until
// the summed error falls below max(absolute, relative * |integral|).
template <class F>
auto integrate(F f, double a, double b, const Tolerance& tol = {}) {
  using T = decltype(f(a));
  Result<T> out;
  if (!(b > a)) {
    out.converged = true;
    return out;
  }

  std::size_t pieces = 1;
  if (std::isfinite(tol.max_panel) && tol.max_panel > 0.0) {
    pieces = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil((b - a) / tol.max_panel)));
  }
  std::priority_queue<detail::Panel<T>> heap;
  T total{};
  double error = 0.0;
  const double w = (b - a) / static_cast<double>(pieces);
  for (std::size_t i = 0; i < pieces; ++i) {
    const double lo = a + w * static_cast<double>(i);
    const double hi = (i + 1 == pieces) ? b : lo + w;
    auto p = detail::gk15<T>(f, lo, hi);
    total += p.value;
    error += p.error;
    heap.push(p);
  }
  out.evaluations = 15 * pieces;

  auto done = [&] { return error <= std::max(tol.absolute, tol.relative * detail::magnitude(total)); };
  while (!done() && heap.size() < tol.max_panels) {
    auto worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      heap.push(worst);
      break;
    }
    auto left = detail::gk15<T>(f, worst.a, mid);
    auto right = detail::gk15<T>(f, mid, worst.b);
    out.evaluations += 30;
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  // Re-sum to shed the drift of the running updates.
  T resummed{};
  double err = 0.0;
  while (!heap.empty()) {
    resummed += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  out.value = resummed;
  out.error = err;
  out.converged = err <= std::max(tol.absolute, tol.relative * detail::magnitude(resummed)) * 1.000001;
  return out;
}

}  // namespace srpass::quad
