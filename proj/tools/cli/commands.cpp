// Copyright 2026 The srpass Authors
// SPDX-License-Identifier: Apache-2.0

#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <iostream>
#include <map>
#include <string>

#include "srpass/brownian.hpp"
#include "srpass/config.hpp"
#include "srpass/csv.hpp"
#include "srpass/dynamics.hpp"
#include "srpass/ensemble.hpp"
#include "srpass/error.hpp"
#include "srpass/fitting.hpp"
#include "srpass/kernels.hpp"
#include "srpass/scaling.hpp"

namespace srpass::cli {

namespace {

using json = nlohmann::ordered_json;

std::string utc_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string output_path(const GlobalOptions& opts, const std::string& suffix) { return opts.out + suffix; }

class Run {
 public:
  Run(const GlobalOptions& opts, std::string command, const ModelConfig& cfg) : opts_(opts) {
    manifest_.command = std::move(command);
    manifest_.config = cfg;
    manifest_.started = utc_now();
  }

  RunManifest& manifest() { return manifest_; }

  void write(const std::string& suffix, const std::string& content) {
    const std::string path = output_path(opts_, suffix);
    csv::write_file_atomic(path, content);
    manifest_.outputs.push_back(path);
  }

  void warn(const std::string& msg) {
    manifest_.warnings.push_back(msg);
    if (!opts_.quiet) std::cerr << "warning: " << msg << '\n';
  }

  EnsembleOptions ensemble_options(const std::string& label) const {
    EnsembleOptions eo;
    eo.threads = opts_.threads;
    if (!opts_.quiet) {
      eo.progress = [label](std::size_t done, std::size_t total) {
        const std::size_t step = std::max<std::size_t>(1, total / 10);
        if (done % step == 0 || done == total) std::cerr << label << ": " << done << "/" << total << "\n";
      };
    }
    return eo;
  }

  RunManifest finish() {
    manifest_.finished = utc_now();
    const std::string path = output_path(opts_, "_manifest.json");
    manifest_.outputs.push_back(path);
    csv::write_file_atomic(path, manifest_.to_json() + "\n");
    return manifest_;
  }

 private:
  const GlobalOptions& opts_;
  RunManifest manifest_;
};

void require_trajectories(std::size_t n) {
  if (n < 1) throw UsageError("n_traj must be >= 1");
}

json moments_json(const MomentErrors& m) {
  return {{"mean", m.mean}, {"variance", m.variance}, {"skew", m.skew}, {"kurtosis", m.kurtosis}};
}

json fit_json(const char* distribution, const char* method, double mu, double lambda, const FitQuality& q,
              const PassageAnalysis& a) {
  return {{"distribution", distribution},
          {"method", method},
          {"mu", mu},
          {"lambda", lambda},
          {"residual_sum", q.residual_sum},
          {"moment_errors", moments_json(q.moment_errors)},
          {"n_samples", a.n_samples},
          {"n_excluded", a.n_excluded}};
}

json analysis_json(double threshold, const PassageAnalysis& a) {
  json fits = json::array();
  if (a.ig_lsq) fits.push_back(fit_json("inverse_gaussian", "lsq", a.ig_lsq->mu, a.ig_lsq->lambda, *a.ig_lsq_quality, a));
  if (a.ig_mle) fits.push_back(fit_json("inverse_gaussian", "mle", a.ig_mle->mu, a.ig_mle->lambda, *a.ig_mle_quality, a));
  if (a.gumbel_lsq) {
    fits.push_back(fit_json("gumbel", "lsq", a.gumbel_lsq->mu, a.gumbel_lsq->lambda, *a.gumbel_lsq_quality, a));
  }
  return {{"threshold", threshold}, {"n_samples", a.n_samples}, {"n_excluded", a.n_excluded},
          {"valid", a.valid},       {"fits", fits},            {"errors", a.errors},
          {"warnings", a.warnings}};
}

void add_histogram_rows(csv::Table& t, const std::string& key, const Histogram& h) {
  for (std::size_t i = 0; i < h.bins(); ++i) {
    t.add_row({key, csv::format(h.bin_edges[i]), csv::format(h.bin_edges[i + 1]), std::to_string(h.counts[i]),
               csv::format(h.density(i))});
  }
}

std::vector<double> scaled(std::vector<double> t, double gamma) {
  for (double& x : t) x *= gamma;
  return t;
}

}  // namespace

ModelConfig resolve_config(const GlobalOptions& opts, const char* env_seed) {
  ModelConfig cfg = opts.config ? load_config(*opts.config) : ModelConfig{};
  if (opts.seed) {
    cfg.rng_seed = *opts.seed;
  } else if (env_seed && *env_seed) {
    try {
      std::size_t used = 0;
      const std::string s(env_seed);
      const unsigned long long v = std::stoull(s, &used, 10);
      if (used != s.size() || s.front() == '-') throw std::invalid_argument("trailing characters");
      cfg.rng_seed = v;
    } catch (const std::exception&) {
      throw UsageError(std::string("SRPASS_SEED is not an unsigned 64-bit integer: ") + env_seed);
    }
  }
  cfg.validate();
  return cfg;
}

std::string RunManifest::to_json() const {
  json j;
  j["command"] = command;
  j["config"] = json::parse(config_to_json(config));
  j["seed"] = config.rng_seed;
  j["tool_version"] = tool_version;
  j["started"] = started;
  j["finished"] = finished;
  j["outputs"] = outputs;
  j["warnings"] = warnings;
  j["summary"] = summary;
  return j.dump(2);
}

RunManifest cmd_density(const GlobalOptions& opts, const ModelConfig& cfg, const DensityArgs& args) {
  require_trajectories(args.n_traj);
  if (!(args.tau >= 0.0)) throw UsageError("tau must be >= 0");
  Run run(opts, "density", cfg);
  const Model model(cfg);
  const DensityAverage mc = mc_photon_density(model, args.n_traj, args.tau, run.ensemble_options("density"));
  const std::vector<double> oracle = quantum_flux_profile(args.tau, model);

  csv::Table t({"xi", "mc_flux", "oracle_flux"});
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < mc.xi.size(); ++i) {
    t.add_row({csv::format(mc.xi[i]), csv::format(mc.mean_flux[i]), csv::format(oracle[i])});
    num += (mc.mean_flux[i] - oracle[i]) * (mc.mean_flux[i] - oracle[i]);
    den += oracle[i] * oracle[i];
  }
  run.write("_density.csv", t.str());
  run.manifest().summary = {{"tau", args.tau},
                            {"n_traj", args.n_traj},
                            {"n_traj_used", mc.n_traj_used},
                            {"relative_l2", den > 0.0 ? std::sqrt(num / den) : 0.0}};
  return run.finish();
}

RunManifest cmd_passage(const GlobalOptions& opts, const ModelConfig& cfg, const PassageArgs& args) {
  require_trajectories(args.n_traj);
  validate_thresholds(args.thresholds);
  Run run(opts, "passage", cfg);
  const Model model(cfg);
  const EnsembleResult res = run_ensemble(model, args.n_traj, args.thresholds, run.ensemble_options("passage"));

  csv::Table samples({"trajectory_index", "threshold", "passage_time"});
  for (const auto& s : res.samples) {
    samples.add_row({std::to_string(s.trajectory_index), csv::format(s.threshold), csv::format(s.time)});
  }
  run.write("_samples.csv", samples.str());

  csv::Table hist({"threshold", "bin_lo", "bin_hi", "count", "density"});
  json reports = json::array();
  for (std::size_t k = 0; k < args.thresholds.size(); ++k) {
    const auto times = res.times(k);
    const PassageAnalysis a = analyze_passage_times(times, res.absent(k));
    for (const auto& w : a.warnings) run.warn("threshold " + csv::format(args.thresholds[k]) + ": " + w);
    if (a.n_samples > 0) add_histogram_rows(hist, csv::format(args.thresholds[k]), a.histogram);
    reports.push_back(analysis_json(args.thresholds[k], a));
  }
  run.write("_histogram.csv", hist.str());
  json fits = {{"gamma", cfg.gamma}, {"n_traj", args.n_traj}, {"aborted", res.aborted}, {"thresholds", reports}};
  run.write("_fits.json", fits.dump(2) + "\n");

  if (args.dump_trajectory) {
    const std::uint64_t idx = *args.dump_trajectory;
    TrajectoryOptions to;
    to.record_series = true;
    to.index = idx;
    const auto tr = run_trajectory(model, stream_seed(cfg.rng_seed, idx), args.thresholds, to);
    csv::Table series({"tau", "n_emitted", "flux"});
    for (const auto& p : tr.series) series.add_row({csv::format(p.tau), csv::format(p.n_emitted), csv::format(p.flux)});
    run.write("_trajectory_" + std::to_string(idx) + ".csv", series.str());
  }
  run.manifest().summary = {{"n_traj", args.n_traj}, {"aborted", res.aborted.size()}};
  return run.finish();
}

RunManifest cmd_scan(const GlobalOptions& opts, const ModelConfig& cfg, const ScanArgs& args) {
  require_trajectories(args.n_traj);
  validate_thresholds(args.thresholds);
  if (args.gammas.empty()) throw UsageError("at least one coupling is required");
  for (double g : args.gammas) {
    if (!(g >= kGammaLow && g <= kGammaHigh)) throw UsageError("couplings must lie in [0.1, 100]");
  }
  Run run(opts, "scan", cfg);
  if (cfg.dtau || cfg.tau_max) run.warn("dtau and tau_max are reset to their per-coupling defaults in a scan");

  std::vector<double> gammas = args.gammas;
  std::sort(gammas.begin(), gammas.end());
  gammas.erase(std::unique(gammas.begin(), gammas.end()), gammas.end());
  std::vector<double> all = gammas;
  all.push_back(kGammaLow);
  all.push_back(kGammaHigh);
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());

  struct Point {
    std::vector<std::vector<double>> times;  // per threshold, unscaled
    std::vector<std::size_t> absent;
  };
  std::map<double, Point> runs;
  for (double g : all) {
    ModelConfig c = cfg;
    c.gamma = g;
    c.dtau.reset();
    c.tau_max.reset();
    const auto res = run_ensemble(Model(c), args.n_traj, args.thresholds,
                                  run.ensemble_options("scan gamma=" + csv::format(g)));
    Point p;
    for (std::size_t k = 0; k < args.thresholds.size(); ++k) {
      p.times.push_back(res.times(k));
      p.absent.push_back(res.absent(k));
    }
    runs.emplace(g, std::move(p));
  }

  csv::Table table({"gamma", "n_th", "mu", "lambda", "s", "overlap_low", "overlap_high", "regime"});
  json per_gamma = json::array();
  std::vector<std::pair<double, double>> weak, strong;
  for (double g : gammas) {
    const Point& p = runs.at(g);
    double s_sum = 0.0;
    std::size_t s_n = 0;
    bool all_weak = true, all_strong = true;
    json rows = json::array();
    for (std::size_t k = 0; k < args.thresholds.size(); ++k) {
      const auto& t = p.times[k];
      const PassageAnalysis a = analyze_passage_times(t, p.absent[k]);
      for (const auto& w : a.warnings) {
        run.warn("gamma " + csv::format(g) + ", threshold " + csv::format(args.thresholds[k]) + ": " + w);
      }
      const std::optional<IGParams> fit = a.ig_lsq ? a.ig_lsq : a.ig_mle;
      const double mean = t.empty() ? 0.0 : sample_moments(t).mean;
      const Regime regime = classify_regime(mean);
      all_weak = all_weak && regime == Regime::weak;
      all_strong = all_strong && regime == Regime::strong;
      auto ov = [&](double ref) -> std::optional<double> {
        const auto& tr = runs.at(ref).times[k];
        if (t.empty() || tr.empty()) return std::nullopt;
        return overlap(scaled_histogram(t, g), scaled_histogram(tr, ref));
      };
      const auto o_low = ov(kGammaLow), o_high = ov(kGammaHigh);
      std::optional<double> s;
      if (fit && a.valid) {
        s = s_ratio(*fit);
        s_sum += *s;
        ++s_n;
      }
      table.add_row({csv::format(g), csv::format(args.thresholds[k]), fit ? csv::format(fit->mu) : "",
                     fit ? csv::format(fit->lambda) : "", csv::format(s), csv::format(o_low), csv::format(o_high),
                     std::string(regime_name(regime))});
      rows.push_back(analysis_json(args.thresholds[k], a));
    }
    json entry = {{"gamma", g}, {"fits", rows}};
    if (s_n > 0) {
      const double s_mean = s_sum / static_cast<double>(s_n);
      entry["s_mean"] = s_mean;
      if (all_weak && g <= 1.0) weak.emplace_back(g, s_mean);
      if (all_strong) strong.emplace_back(g, s_mean);
    }
    per_gamma.push_back(entry);
  }
  run.write("_scan.csv", table.str());

  auto law = [&](const std::vector<std::pair<double, double>>& pts, Regime r) {
    json j = {{"regime", regime_name(r)}, {"points", json::array()}};
    for (const auto& [g, s] : pts) j["points"].push_back({g, s});
    try {
      const LinearFit f = fit_s_vs_gamma(pts, r);
      j["slope"] = f.slope;
      j["intercept"] = f.intercept;
      j["residual"] = f.residual;
    } catch (const FitError& e) {
      j["error"] = e.what();
    }
    return j;
  };
  json summary = {{"n_traj", args.n_traj},
                  {"gamma_low", kGammaLow},
                  {"gamma_high", kGammaHigh},
                  {"s_laws", {law(weak, Regime::weak), law(strong, Regime::strong)}},
                  {"couplings", per_gamma}};
  run.write("_scan_fit.json", summary.dump(2) + "\n");
  run.manifest().summary = {{"couplings", gammas}, {"references", {kGammaLow, kGammaHigh}}};
  return run.finish();
}

RunManifest cmd_brownian(const GlobalOptions& opts, const ModelConfig& cfg, const BrownianArgs& args) {
  if (!(args.mean_t > 0.0) || !(args.s > 0.0)) throw UsageError("mean_T and s must be > 0");
  Run run(opts, "brownian", cfg);
  const DriftSpec spec = correspondence_map(args.mean_t, args.s);
  const std::vector<double> samples = bm_passage_ensemble(spec, args.n_samples, cfg.rng_seed);

  const json spec_json = {{"nu", spec.nu}, {"sigma", spec.sigma}, {"alpha", spec.alpha}, {"dt", spec.dt}};
  csv::Table t({"sample_index", "time"});
  for (std::size_t i = 0; i < samples.size(); ++i) t.add_row({std::to_string(i), csv::format(samples[i])});
  run.write("_brownian.csv", "# " + spec_json.dump() + "\n" + t.str());

  const IGParams target{args.mean_t, args.s * args.mean_t * args.mean_t};
  json report = {{"spec", spec_json}, {"target", {{"mu", target.mu}, {"lambda", target.lambda}}},
                 {"n_samples", samples.size()}};
  if (samples.size() >= 2) {
    try {
      const IGParams fit = fit_ig_mle(samples);
      report["fit"] = {{"distribution", "inverse_gaussian"}, {"method", "mle"}, {"mu", fit.mu}, {"lambda", fit.lambda}};
    } catch (const std::exception& e) {
      report["fit_error"] = e.what();
      run.warn(std::string("IG fit failed: ") + e.what());
    }
  } else {
    run.warn("fewer than two samples; IG fit skipped");
  }
  if (!samples.empty()) {
    const double ks = ks_statistic(samples, [&](double x) { return ig_cdf(x, target); });
    const double crit = ks_critical_value(samples.size(), 0.01);
    report["ks_statistic"] = ks;
    report["ks_critical_1pct"] = crit;
    report["ks_pass"] = ks < crit;
  }
  run.write("_brownian_fit.json", report.dump(2) + "\n");
  return run.finish();
}

RunManifest cmd_oracle(const GlobalOptions& opts, const ModelConfig& cfg, const OracleArgs& args) {
  if (args.taus.empty()) throw UsageError("at least one tau is required");
  for (double t : args.taus) {
    if (!(t >= 0.0) || !std::isfinite(t)) throw UsageError("tau values must be finite and >= 0");
  }
  Run run(opts, "oracle", cfg);
  const Model model(cfg);
  csv::Table t({"tau", "flux", "emitted_photons"});
  for (double tau : args.taus) {
    t.add_row({csv::format(tau), csv::format(quantum_photon_flux(cfg.lambda_len, tau, model)),
               csv::format(quantum_emitted_photons(tau, model))});
  }
  run.write("_oracle.csv", t.str());

  csv::Table profile({"xi", "tau", "flux"});
  const auto xi = model.grid().xi();
  for (double tau : args.taus) {
    const std::vector<double> m = quantum_flux_profile(tau, model);
    for (std::size_t i = 0; i < m.size(); ++i) profile.add_row({csv::format(xi[i]), csv::format(tau), csv::format(m[i])});
  }
  run.write("_oracle_profile.csv", profile.str());
  return run.finish();
}

}  // namespace srpass::cli
