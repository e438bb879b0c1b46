// Copyright 2026 The srpass Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rk4_kernel.hpp"
#include "srpass/model.hpp"

namespace srpass::detail {

inline constexpr int kLanes = 8;
typedef double LaneVector __attribute__((vector_size(kLanes * sizeof(double))));

// kLanes independent trajectories integrated side by side.  Each lane is
// bit-identical to the scalar integrator started from the same stream.
class LaneEngine {
 public:
  LaneEngine(const Model& model, double dtau);

  // Fills a lane with the vacuum seed drawn from the given stream.
  void seed(int lane, std::uint64_t stream);
  void clear(int lane);

  // Advances every lane by one step; total_{r,i}[lane] receive the source
  // sum of the state before the step.
  void step(double* total_r, double* total_i);

  // (Gamma/N) |C(xi_i)|^2 = (N/Gamma) |E(xi_i)|^2 of the lane's current state.
  void flux_profile(int lane, double* out) const;

 private:
  StepCoefficients coeff_;
  std::size_t n_;
  bool backward_;
  double coupling_;
  double seed_scale_;
  std::vector<LaneVector> ar_, ai_, br_, bi_;
};

}  // namespace srpass::detail
