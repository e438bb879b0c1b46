// Copyright 2026 The srpass Authors
// SPDX-License-Identifier: Apache-2.0

#include "srpass/config.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "srpass/error.hpp"

namespace srpass {

namespace {

using nlohmann::json;

double get_number(const json& j, const char* key) {
  if (!j.is_number()) throw ConfigError(std::string("config key '") + key + "' must be a number");
  return j.get<double>();
}

}  // namespace

ModelConfig parse_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed config JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");

  ModelConfig cfg;
  for (const auto& [key, value] : doc.items()) {
    if (key == "gamma") {
      cfg.gamma = get_number(value, "gamma");
    } else if (key == "n_atoms") {
      cfg.n_atoms = get_number(value, "n_atoms");
    } else if (key == "lambda_len") {
      cfg.lambda_len = get_number(value, "lambda_len");
    } else if (key == "grid_points") {
      if (!value.is_number_integer() || value.get<long long>() < 2) {
        throw ConfigError("config key 'grid_points' must be an integer >= 2");
      }
      cfg.grid_points = value.get<std::size_t>();
    } else if (key == "dtau") {
      cfg.dtau = get_number(value, "dtau");
    } else if (key == "tau_max") {
      cfg.tau_max = get_number(value, "tau_max");
    } else if (key == "backward_enabled") {
      if (!value.is_boolean()) throw ConfigError("config key 'backward_enabled' must be a boolean");
      cfg.backward_enabled = value.get<bool>();
    } else if (key == "rng_seed") {
      if (!value.is_number_unsigned()) throw ConfigError("config key 'rng_seed' must be a nonnegative integer");
      cfg.rng_seed = value.get<std::uint64_t>();
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  cfg.validate();
  return cfg;
}

ModelConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string config_to_json(const ModelConfig& cfg, int indent) {
  json j;
  j["gamma"] = cfg.gamma;
  j["n_atoms"] = cfg.n_atoms;
  j["lambda_len"] = cfg.lambda_len;
  j["grid_points"] = cfg.grid_points;
  j["dtau"] = cfg.time_step();
  j["tau_max"] = cfg.horizon();
  j["backward_enabled"] = cfg.backward_enabled;
  j["rng_seed"] = cfg.rng_seed;
  return j.dump(indent);
}

}  // namespace srpass
