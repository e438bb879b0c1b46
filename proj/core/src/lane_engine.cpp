// Copyright 2026 The srpass Authors
// SPDX-License-Identifier: Apache-2.0

#include "lane_engine.hpp"

#include <cmath>

#include "srpass/rng.hpp"

namespace srpass::detail {

LaneEngine::LaneEngine(const Model& model, double dtau)
    : coeff_(std::vector<double>(model.profile().amplitude().begin(), model.profile().amplitude().end()),
             model.grid().dxi(), model.coupling(), dtau),
      n_(model.grid().size()),
      backward_(model.config().backward_enabled),
      coupling_(model.coupling()),
      seed_scale_(1.0 / std::sqrt(2.0 * model.grid().dxi())),
      ar_(n_, LaneVector{}),
      ai_(n_, LaneVector{}),
      br_(n_, LaneVector{}),
      bi_(n_, LaneVector{}) {}

void LaneEngine::seed(int lane, std::uint64_t stream) {
  Rng rng(stream);
  for (std::size_t i = 0; i < n_; ++i) {
    const auto [g1, g2] = rng.normal_pair();
    // a = conj(psi_plus)
    ar_[i][lane] = g1 * seed_scale_;
    ai_[i][lane] = -(g2 * seed_scale_);
    br_[i][lane] = 0.0;
    bi_[i][lane] = 0.0;
  }
}

void LaneEngine::clear(int lane) {
  for (std::size_t i = 0; i < n_; ++i) {
    ar_[i][lane] = ai_[i][lane] = br_[i][lane] = bi_[i][lane] = 0.0;
  }
}

void LaneEngine::step(double* total_r, double* total_i) {
  LaneVector tr{}, ti{};
  if (backward_) {
    rk4_step<LaneVector, true>(coeff_, n_, ar_.data(), ai_.data(), br_.data(), bi_.data(), tr, ti);
  } else {
    rk4_step<LaneVector, false>(coeff_, n_, ar_.data(), ai_.data(), br_.data(), bi_.data(), tr, ti);
  }
  for (int l = 0; l < kLanes; ++l) {
    total_r[l] = tr[l];
    total_i[l] = ti[l];
  }
}

void LaneEngine::flux_profile(int lane, double* out) const {
  double acc_r = 0.0, acc_i = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    double xr = ar_[i][lane], xi = ai_[i][lane];
    if (backward_) {
      xr += br_[i][lane];
      xi += bi_[i][lane];
    }
    const double sr = coeff_.weight[i] * xr, si = coeff_.weight[i] * xi;
    const double cr = acc_r + 0.5 * sr, ci = acc_i + 0.5 * si;
    out[i] = coupling_ * (cr * cr + ci * ci);
    acc_r += sr;
    acc_i += si;
  }
}

}  // namespace srpass::detail
