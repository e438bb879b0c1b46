// Copyright 2026 The srpass Authors
// SPDX-License-Identifier: Apache-2.0

#include "srpass/ensemble.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <string>
#include <thread>

#include "lane_engine.hpp"
#include "passage_counter.hpp"
#include "srpass/dynamics.hpp"
#include "srpass/error.hpp"
#include "srpass/rng.hpp"

namespace srpass {

namespace {

using detail::kLanes;

constexpr std::uint64_t kIdle = ~std::uint64_t{0};

unsigned worker_count(unsigned requested, std::size_t work) {
  unsigned w = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  const std::size_t useful = (work + kLanes - 1) / kLanes;
  return static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(w, useful)));
}

// Runs body(worker) on `workers` threads and rethrows the first exception.
template <class F>
void parallel(unsigned workers, F body) {
  if (workers == 1) {
    body();
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      try {
        body();
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

// Hands out trajectory indices in increasing order.
class Dispenser {
 public:
  explicit Dispenser(std::size_t total) : total_(total) {}
  std::uint64_t take() {
    const std::size_t i = next_.fetch_add(1, std::memory_order_relaxed);
    return i < total_ ? i : kIdle;
  }

 private:
  std::size_t total_;
  std::atomic<std::size_t> next_{0};
};

class Progress {
 public:
  Progress(const EnsembleOptions& o, std::size_t total) : fn_(o.progress), total_(total) {}
  void tick() {
    const std::size_t d = done_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (fn_) {
      std::lock_guard lock(mutex_);
      fn_(d, total_);
    }
  }

 private:
  const std::function<void(std::size_t, std::size_t)>& fn_;
  std::size_t total_;
  std::atomic<std::size_t> done_{0};
  std::mutex mutex_;
};

void check_aborts(std::size_t aborted, std::size_t total, double max_fraction) {
  if (static_cast<double>(aborted) > max_fraction * static_cast<double>(total)) {
    throw EnsembleError(std::to_string(aborted) + " of " + std::to_string(total) +
                        " trajectories aborted on non-finite amplitudes");
  }
}

}  // namespace

void EnsembleSpec::validate() const {
  cfg.validate();
  if (n_traj < 1) throw ConfigError("n_traj must be >= 1");
  validate_thresholds(thresholds);
}

std::vector<double> EnsembleResult::times(std::size_t k) const {
  std::vector<double> out;
  const std::size_t K = thresholds.size();
  for (std::size_t i = k; i < samples.size(); i += K) {
    if (samples[i].time) out.push_back(*samples[i].time);
  }
  return out;
}

std::size_t EnsembleResult::absent(std::size_t k) const {
  std::size_t n = 0;
  const std::size_t K = thresholds.size();
  for (std::size_t i = k; i < samples.size(); i += K) n += samples[i].time ? 0 : 1;
  return n;
}

EnsembleResult run_ensemble(const EnsembleSpec& spec, const EnsembleOptions& options) {
  spec.validate();
  return run_ensemble(Model(spec.cfg), spec.n_traj, spec.thresholds, options);
}

EnsembleResult run_ensemble(const Model& model, std::size_t n_traj, const std::vector<double>& thresholds,
                            const EnsembleOptions& options) {
  if (n_traj < 1) throw ConfigError("n_traj must be >= 1");
  validate_thresholds(thresholds);
  const auto& cfg = model.config();
  const double dtau = cfg.time_step();
  const std::size_t max_steps = horizon_steps(cfg);
  const double coupling = model.coupling();
  const std::size_t K = thresholds.size();

  std::vector<std::optional<double>> times(n_traj * K);
  std::vector<std::uint64_t> aborted;
  std::mutex aborted_mutex;
  Dispenser dispenser(n_traj);
  Progress progress(options, n_traj);

  parallel(worker_count(options.threads, n_traj), [&] {
    detail::LaneEngine engine(model, dtau);
    std::uint64_t index[kLanes];
    std::size_t level[kLanes];
    detail::PassageCounter counter[kLanes];
    auto refill = [&](int l) {
      index[l] = dispenser.take();
      level[l] = 0;
      if (index[l] == kIdle) {
        engine.clear(l);
        return;
      }
      counter[l] = detail::PassageCounter(thresholds, dtau);
      engine.seed(l, stream_seed(cfg.rng_seed, index[l]));
    };
    for (int l = 0; l < kLanes; ++l) refill(l);

    double tr[kLanes], ti[kLanes];
    for (;;) {
      bool any = false;
      for (int l = 0; l < kLanes; ++l) any = any || index[l] != kIdle;
      if (!any) break;
      engine.step(tr, ti);
      bool finished[kLanes] = {};
      for (int l = 0; l < kLanes; ++l) {
        if (index[l] == kIdle) continue;
        const double flux = coupling * (tr[l] * tr[l] + ti[l] * ti[l]);
        if (!std::isfinite(flux)) {
          std::lock_guard lock(aborted_mutex);
          aborted.push_back(index[l]);
          finished[l] = true;
          continue;
        }
        const bool all = counter[l].feed(level[l], flux);
        if (all || level[l] >= max_steps) {
          const auto& t = counter[l].times();
          std::copy(t.begin(), t.end(), times.begin() + static_cast<std::ptrdiff_t>(index[l] * K));
          finished[l] = true;
        }
        ++level[l];
      }
      for (int l = 0; l < kLanes; ++l) {
        if (!finished[l]) continue;
        progress.tick();
        refill(l);
      }
    }
  });

  std::sort(aborted.begin(), aborted.end());
  for (auto i : aborted) {
    std::fill_n(times.begin() + static_cast<std::ptrdiff_t>(i * K), K, std::nullopt);
  }
  check_aborts(aborted.size(), n_traj, options.max_abort_fraction);

  EnsembleResult out;
  out.thresholds = thresholds;
  out.n_traj = n_traj;
  out.aborted = std::move(aborted);
  out.samples.reserve(n_traj * K);
  for (std::size_t i = 0; i < n_traj; ++i) {
    for (std::size_t k = 0; k < K; ++k) out.samples.push_back({i, thresholds[k], times[i * K + k]});
  }
  return out;
}

DensityAverage mc_photon_density(const ModelConfig& cfg, std::size_t n_traj, double tau_snapshot,
                                 const EnsembleOptions& options) {
  return mc_photon_density(Model(cfg), n_traj, tau_snapshot, options);
}

DensityAverage mc_photon_density(const Model& model, std::size_t n_traj, double tau_snapshot,
                                 const EnsembleOptions& options) {
  if (n_traj < 1) throw ConfigError("n_traj must be >= 1");
  const auto& cfg = model.config();
  if (!(tau_snapshot >= 0.0) || tau_snapshot > cfg.horizon() * (1.0 + 1e-12)) {
    throw ConfigError("tau_snapshot must lie in [0, tau_max]");
  }
  const std::size_t steps =
      tau_snapshot > 0.0 ? static_cast<std::size_t>(std::ceil(tau_snapshot / cfg.time_step() - 1e-9)) : 0;
  const double dtau = steps > 0 ? tau_snapshot / static_cast<double>(steps) : cfg.time_step();
  const std::size_t G = model.grid().size();

  // Per-trajectory profiles, summed in index order afterwards so the mean
  // does not depend on scheduling.
  std::vector<double> profiles(n_traj * G);
  std::vector<std::uint8_t> bad(n_traj, 0);
  Dispenser dispenser(n_traj);
  Progress progress(options, n_traj);

  parallel(worker_count(options.threads, n_traj), [&] {
    detail::LaneEngine engine(model, dtau);
    std::uint64_t index[kLanes];
    std::size_t level[kLanes];
    auto refill = [&](int l) {
      index[l] = dispenser.take();
      level[l] = 0;
      if (index[l] == kIdle) {
        engine.clear(l);
      } else {
        engine.seed(l, stream_seed(cfg.rng_seed, index[l]));
      }
    };
    for (int l = 0; l < kLanes; ++l) refill(l);

    double tr[kLanes], ti[kLanes];
    for (;;) {
      bool any = false;
      for (int l = 0; l < kLanes; ++l) {
        while (index[l] != kIdle && level[l] == steps) {
          double* dst = profiles.data() + index[l] * G;
          engine.flux_profile(l, dst);
          if (!std::all_of(dst, dst + G, [](double v) { return std::isfinite(v); })) bad[index[l]] = 1;
          progress.tick();
          refill(l);
        }
        any = any || index[l] != kIdle;
      }
      if (!any) break;
      engine.step(tr, ti);
      for (int l = 0; l < kLanes; ++l) {
        if (index[l] == kIdle) continue;
        if (!std::isfinite(tr[l]) || !std::isfinite(ti[l])) {
          bad[index[l]] = 1;
          level[l] = steps;  // captured (and discarded) on the next pass
          continue;
        }
        ++level[l];
      }
    }
  });

  const auto n_bad = static_cast<std::size_t>(std::count(bad.begin(), bad.end(), 1));
  check_aborts(n_bad, n_traj, options.max_abort_fraction);

  DensityAverage out;
  out.xi.assign(model.grid().xi().begin(), model.grid().xi().end());
  out.mean_flux.assign(G, 0.0);
  out.tau = tau_snapshot;
  for (std::size_t i = 0; i < n_traj; ++i) {
    if (bad[i]) continue;
    for (std::size_t j = 0; j < G; ++j) out.mean_flux[j] += profiles[i * G + j];
    ++out.n_traj_used;
  }
  for (double& v : out.mean_flux) v /= static_cast<double>(out.n_traj_used);
  return out;
}

BackwardComparison compare_backward_onoff(const EnsembleSpec& spec, const EnsembleOptions& options) {
  EnsembleSpec on = spec, off = spec;
  on.cfg.backward_enabled = true;
  off.cfg.backward_enabled = false;
  return {run_ensemble(on, options), run_ensemble(off, options)};
}

}  // namespace srpass
