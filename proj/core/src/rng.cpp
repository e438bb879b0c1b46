// Copyright 2026 The srpass Authors
// SPDX-License-Identifier: Apache-2.0

#include "srpass/rng.hpp"

#include <cmath>
#include <numbers>

namespace srpass {

double Rng::uniform() {
  // 53 random mantissa bits, offset by half an ulp to exclude 0 and 1.
  return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
}

std::pair<double, double> Rng::normal_pair() {
  const double r = std::sqrt(-2.0 * std::log(uniform()));
  const double t = 2.0 * std::numbers::pi * uniform();
  return {r * std::cos(t), r * std::sin(t)};
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const auto [a, b] = normal_pair();
  spare_ = b;
  has_spare_ = true;
  return a;
}

}  // namespace srpass
