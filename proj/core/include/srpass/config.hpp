// Copyright 2026 The srpass Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "srpass/model.hpp"

namespace srpass {

// Parses a JSON object whose keys are ModelConfig field names.  Every key is
// optional; unknown keys and wrongly typed values raise ConfigError.  The
// result is validated.
ModelConfig parse_config(std::string_view json_text);
ModelConfig load_config(const std::filesystem::path& path);

// Serialises every field, resolving dtau and tau_max to their effective values.
std::string config_to_json(const ModelConfig& cfg, int indent = 2);

}  // namespace srpass
