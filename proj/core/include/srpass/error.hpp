// Copyright 2026 The srpass Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace srpass {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Invalid or unreadable configuration.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A distribution fit that could not be carried out or did not converge.
class FitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Non-finite values appeared while integrating a trajectory.
class TrajectoryError : public std::runtime_error {
 public:
  TrajectoryError(std::uint64_t index, const std::string& what)
      : std::runtime_error(what), index_(index) {}
  std::uint64_t index() const noexcept { return index_; }

 private:
  std::uint64_t index_;
};

// Too many trajectories of an ensemble were aborted.
class EnsembleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace srpass
