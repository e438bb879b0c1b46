// Copyright 2026 The srpass Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "srpass/model.hpp"

namespace srpass::cli {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr double kGammaLow = 0.1;
inline constexpr double kGammaHigh = 100.0;

// Bad command-line input; the tool exits with status 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GlobalOptions {
  std::optional<std::filesystem::path> config;
  std::optional<std::uint64_t> seed;
  unsigned threads = 0;  // 0: hardware concurrency
  std::string out = "srpass";
  bool quiet = false;
};

// Seed precedence: --seed, then $SRPASS_SEED, then the config file.
ModelConfig resolve_config(const GlobalOptions& opts, const char* env_seed);

struct RunManifest {
  std::string command;
  ModelConfig config;
  std::string tool_version = kVersion;
  std::string started;
  std::string finished;
  std::vector<std::string> outputs;
  std::vector<std::string> warnings;
  nlohmann::ordered_json summary = nlohmann::ordered_json::object();

  std::string to_json() const;
};

struct DensityArgs {
  double tau = 2.0;
  std::size_t n_traj = 2000;
};

struct PassageArgs {
  std::vector<double> thresholds{10.0};
  std::size_t n_traj = 10000;
  std::optional<std::uint64_t> dump_trajectory;
};

struct ScanArgs {
  std::vector<double> gammas{0.1, 0.3, 1.0, 3.0, 10.0, 30.0, 100.0};
  std::vector<double> thresholds{5.0, 10.0, 20.0};
  std::size_t n_traj = 10000;
};

struct BrownianArgs {
  double mean_t = 3.2;
  double s = 1.5625;
  std::size_t n_samples = 10000;
};

struct OracleArgs {
  std::vector<double> taus{0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0};
};

// Each command writes its data files with prefix opts.out plus
// <prefix>_manifest.json, and returns the manifest.
RunManifest cmd_density(const GlobalOptions& opts, const ModelConfig& cfg, const DensityArgs& args);
RunManifest cmd_passage(const GlobalOptions& opts, const ModelConfig& cfg, const PassageArgs& args);
RunManifest cmd_scan(const GlobalOptions& opts, const ModelConfig& cfg, const ScanArgs& args);
RunManifest cmd_brownian(const GlobalOptions& opts, const ModelConfig& cfg, const BrownianArgs& args);
RunManifest cmd_oracle(const GlobalOptions& opts, const ModelConfig& cfg, const OracleArgs& args);

// Parses argv, runs the selected command and maps errors to exit codes:
// 0 success, 2 invalid input or configuration, 1 any other failure.
int run(int argc, const char* const* argv);

}  // namespace srpass::cli
