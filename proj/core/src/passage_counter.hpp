// Copyright 2026 The srpass Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace srpass::detail {

// Emitted-photon counter N(tau) = int flux dtau (trapezoid in time) with
// first-passage detection.  Fed once per time level n = 0, 1, 2, ...
class PassageCounter {
 public:
  PassageCounter() = default;
  PassageCounter(std::span<const double> thresholds, double dtau)
      : thresholds_(thresholds), dtau_(dtau), times_(thresholds.size()) {}

  // Records the flux at time level n.  Returns true once every threshold
  // has been passed.
  bool feed(std::size_t n, double flux) {
    if (n == 0) {
      count_ = 0.0;
    } else {
      const double c0 = count_;
      count_ += 0.5 * (flux + prev_flux_) * dtau_;
      while (next_ < thresholds_.size() && count_ >= thresholds_[next_]) {
        const double frac = (thresholds_[next_] - c0) / (count_ - c0);
        times_[next_] = (static_cast<double>(n - 1) + frac) * dtau_;
        ++next_;
      }
    }
    while (next_ < thresholds_.size() && count_ >= thresholds_[next_]) {
      times_[next_] = static_cast<double>(n) * dtau_;
      ++next_;
    }
    prev_flux_ = flux;
    return done();
  }

  bool done() const { return next_ == thresholds_.size(); }
  double count() const { return count_; }
  const std::vector<std::optional<double>>& times() const { return times_; }

 private:
  std::span<const double> thresholds_;
  double dtau_ = 0.0;
  double count_ = 0.0;
  double prev_flux_ = 0.0;
  std::size_t next_ = 0;
  std::vector<std::optional<double>> times_;
};

}  // namespace srpass::detail
