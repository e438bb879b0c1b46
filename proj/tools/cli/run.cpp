// Copyright 2026 The srpass Authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdlib>
#include <exception>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "srpass/error.hpp"

namespace srpass::cli {

int run(int argc, const char* const* argv) {
  CLI::App app{"Superradiant photon-counting passage times in a Bose-Einstein condensate", "srpass"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  GlobalOptions g;
  std::string config_path;
  std::uint64_t seed = 0;
  app.add_option("--config", config_path, "JSON model configuration")->check(CLI::ExistingFile);
  auto* seed_opt = app.add_option("--seed", seed, "master seed (overrides SRPASS_SEED)");
  app.add_option("--threads", g.threads, "worker threads, 0 for all cores");
  app.add_option("--out", g.out, "output file prefix");
  app.add_flag("-q,--quiet", g.quiet, "suppress progress on stderr");
  app.fallthrough();

  DensityArgs density;
  auto* c_density = app.add_subcommand("density", "trajectory-averaged photon density vs the quantum oracle");
  c_density->add_option("--tau", density.tau, "snapshot time");
  c_density->add_option("--n-traj", density.n_traj, "number of trajectories");

  PassageArgs passage;
  std::uint64_t dump = 0;
  auto* c_passage = app.add_subcommand("passage", "passage-time samples, histograms and fits");
  c_passage->add_option("--thresholds", passage.thresholds, "ascending photon thresholds")->delimiter(',');
  c_passage->add_option("--n-traj", passage.n_traj, "number of trajectories");
  auto* dump_opt = c_passage->add_option("--dump-trajectory", dump, "write the time series of one trajectory");

  ScanArgs scan;
  auto* c_scan = app.add_subcommand("scan", "coupling scan with overlaps and s-ratio laws");
  c_scan->add_option("--gammas", scan.gammas, "couplings in [0.1, 100]")->delimiter(',');
  c_scan->add_option("--thresholds", scan.thresholds, "ascending photon thresholds")->delimiter(',');
  c_scan->add_option("--n-traj", scan.n_traj, "trajectories per coupling");

  BrownianArgs brownian;
  auto* c_brownian = app.add_subcommand("brownian", "first passages of the equivalent drifted Brownian motion");
  c_brownian->add_option("--mean-t", brownian.mean_t, "mean passage time");
  c_brownian->add_option("--s", brownian.s, "shape ratio s = lambda / mu^2");
  c_brownian->add_option("--n-samples", brownian.n_samples, "number of samples");

  OracleArgs oracle;
  auto* c_oracle = app.add_subcommand("oracle", "quantum flux and emitted photon number");
  c_oracle->add_option("--taus", oracle.taus, "times")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!config_path.empty()) g.config = config_path;
    if (*seed_opt) g.seed = seed;
    if (*dump_opt) passage.dump_trajectory = dump;
    const ModelConfig cfg = resolve_config(g, std::getenv("SRPASS_SEED"));

    RunManifest m;
    if (*c_density) m = cmd_density(g, cfg, density);
    else if (*c_passage) m = cmd_passage(g, cfg, passage);
    else if (*c_scan) m = cmd_scan(g, cfg, scan);
    else if (*c_brownian) m = cmd_brownian(g, cfg, brownian);
    else m = cmd_oracle(g, cfg, oracle);
    if (!g.quiet) {
      for (const auto& f : m.outputs) std::cerr << "wrote " << f << '\n';
    }
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "srpass: " << e.what() << '\n';
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "srpass: invalid configuration: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "srpass: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "srpass: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace srpass::cli
