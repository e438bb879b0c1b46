// Copyright 2026 The srpass Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace srpass::csv {

// Shortest round-trip form is not used: every value carries 17 significant
// digits so that files are byte-stable across runs.
std::string format(double v);
std::string format(std::optional<double> v);  // empty field when absent

// Comma-separated rows with a header, LF line endings.
class Table {
 public:
  explicit Table(std::vector<std::string> header);

  void add_row(std::vector<std::string> fields);
  std::string str() const;
  std::size_t rows() const { return rows_.size(); }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

// Writes content to path through a temporary sibling and a rename.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace srpass::csv
