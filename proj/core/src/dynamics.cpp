// Copyright 2026 The srpass Authors
// SPDX-License-Identifier: Apache-2.0

#include "srpass/dynamics.hpp"

#include <cmath>
#include <string>

#include "passage_counter.hpp"
#include "rk4_kernel.hpp"
#include "srpass/error.hpp"

namespace srpass {

namespace {

std::vector<double> amplitudes(const Model& model) {
  const auto a = model.profile().amplitude();
  return {a.begin(), a.end()};
}

bool finite(const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Advances (a, b) in place and returns the source total of the old state.
Complex advance(const detail::StepCoefficients& c, bool backward, std::vector<double>& ar,
                std::vector<double>& ai, std::vector<double>& br, std::vector<double>& bi) {
  double tr = 0.0, ti = 0.0;
  const std::size_t n = ar.size();
  if (backward) {
    detail::rk4_step<double, true>(c, n, ar.data(), ai.data(), br.data(), bi.data(), tr, ti);
  } else {
    detail::rk4_step<double, false>(c, n, ar.data(), ai.data(), br.data(), bi.data(), tr, ti);
  }
  return {tr, ti};
}

}  // namespace

FieldState seed_trajectory(const Grid& grid, Rng& rng) {
  const std::size_t n = grid.size();
  const double scale = 1.0 / std::sqrt(2.0 * grid.dxi());
  FieldState s;
  s.psi_plus.resize(n);
  s.psi_minus.assign(n, Complex{});
  s.e_field.assign(n, Complex{});
  for (std::size_t i = 0; i < n; ++i) {
    const auto [g1, g2] = rng.normal_pair();
    s.psi_plus[i] = {g1 * scale, g2 * scale};
  }
  return s;
}

FieldState seed_trajectory(const Model& model, Rng& rng) {
  FieldState s = seed_trajectory(model.grid(), rng);
  s.e_field = slaved_field(s, model);
  return s;
}

std::vector<Complex> slaved_field(const FieldState& state, const Model& model) {
  const auto amp = model.profile().amplitude();
  const double dxi = model.grid().dxi();
  const bool backward = model.config().backward_enabled;
  const Complex factor{0.0, -model.coupling()};
  std::vector<Complex> e(amp.size());
  Complex acc{};
  for (std::size_t i = 0; i < amp.size(); ++i) {
    Complex src = std::conj(state.psi_plus[i]);
    if (backward) src += state.psi_minus[i];
    src *= amp[i] * dxi;
    e[i] = factor * (acc + 0.5 * src);
    acc += src;
  }
  return e;
}

Complex end_field(const FieldState& state, const Model& model) {
  const auto amp = model.profile().amplitude();
  const double dxi = model.grid().dxi();
  const bool backward = model.config().backward_enabled;
  Complex acc{};
  for (std::size_t i = 0; i < amp.size(); ++i) {
    Complex src = std::conj(state.psi_plus[i]);
    if (backward) src += state.psi_minus[i];
    acc += amp[i] * dxi * src;
  }
  return Complex{0.0, -model.coupling()} * acc;
}

double emitted_flux(const FieldState& state, const Model& model) {
  return std::norm(end_field(state, model)) / model.coupling();
}

FieldState step(const FieldState& state, const Model& model) {
  return step(state, model, model.config().time_step());
}

FieldState step(const FieldState& state, const Model& model, double dtau) {
  if (!(dtau > 0.0)) throw DomainError("dtau must be > 0");
  const std::size_t n = model.grid().size();
  if (state.psi_plus.size() != n || state.psi_minus.size() != n) {
    throw DomainError("field state does not match the grid");
  }
  const bool backward = model.config().backward_enabled;
  const detail::StepCoefficients c(amplitudes(model), model.grid().dxi(), model.coupling(), dtau);
  std::vector<double> ar(n), ai(n), br(n), bi(n);
  for (std::size_t i = 0; i < n; ++i) {
    ar[i] = state.psi_plus[i].real();
    ai[i] = -state.psi_plus[i].imag();
    br[i] = state.psi_minus[i].real();
    bi[i] = state.psi_minus[i].imag();
  }
  advance(c, backward, ar, ai, br, bi);

  FieldState out;
  out.psi_plus.resize(n);
  out.psi_minus.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.psi_plus[i] = {ar[i], -ai[i]};
    out.psi_minus[i] = backward ? Complex{br[i], bi[i]} : state.psi_minus[i];
    if (!finite(out.psi_plus[i]) || !finite(out.psi_minus[i])) {
      throw TrajectoryError(0, "non-finite amplitude at grid point " + std::to_string(i) +
                                   ", tau = " + std::to_string(state.tau + dtau));
    }
  }
  out.tau = state.tau + dtau;
  out.e_field = slaved_field(out, model);
  return out;
}

std::size_t horizon_steps(const ModelConfig& cfg) {
  const double r = cfg.horizon() / cfg.time_step();
  return static_cast<std::size_t>(std::floor(r + 1e-9));
}

void validate_thresholds(std::span<const double> thresholds) {
  if (thresholds.empty()) throw ConfigError("at least one threshold is required");
  for (std::size_t i = 0; i < thresholds.size(); ++i) {
    if (!(thresholds[i] >= 0.0) || !std::isfinite(thresholds[i])) {
      throw ConfigError("thresholds must be finite and nonnegative");
    }
    if (i > 0 && !(thresholds[i] > thresholds[i - 1])) {
      throw ConfigError("thresholds must be strictly ascending");
    }
  }
}

TrajectoryResult run_trajectory(const Model& model, std::uint64_t trajectory_seed,
                                std::span<const double> thresholds, const TrajectoryOptions& options) {
  validate_thresholds(thresholds);
  const auto& cfg = model.config();
  const double dtau = cfg.time_step();
  const std::size_t max_steps = horizon_steps(cfg);
  const std::size_t n = model.grid().size();
  const bool backward = cfg.backward_enabled;
  const detail::StepCoefficients c(amplitudes(model), model.grid().dxi(), model.coupling(), dtau);
  const double coupling = model.coupling();

  Rng rng(trajectory_seed);
  const FieldState seed = seed_trajectory(model.grid(), rng);
  std::vector<double> ar(n), ai(n), br(n, 0.0), bi(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    ar[i] = seed.psi_plus[i].real();
    ai[i] = -seed.psi_plus[i].imag();
  }

  detail::PassageCounter counter(thresholds, dtau);
  TrajectoryResult result;
  const std::size_t stride = options.series_stride == 0 ? 1 : options.series_stride;
  for (std::size_t level = 0;; ++level) {
    // Stepping reports the source total of the state at this level.
    const Complex total = advance(c, backward, ar, ai, br, bi);
    const double flux = coupling * std::norm(total);
    if (!std::isfinite(flux)) {
      throw TrajectoryError(options.index, "non-finite photon flux at tau = " +
                                               std::to_string(static_cast<double>(level) * dtau));
    }
    const bool all_passed = counter.feed(level, flux);
    if (options.record_series && level % stride == 0) {
      result.series.push_back({static_cast<double>(level) * dtau, counter.count(), flux});
    }
    result.steps = level;
    if (level >= max_steps || (all_passed && !options.run_to_horizon)) break;
  }
  result.passage_times = counter.times();
  result.n_emitted = counter.count();
  return result;
}

}  // namespace srpass
