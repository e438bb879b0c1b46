// Copyright 2026 The srpass Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli/commands.hpp"

int main(int argc, char** argv) { return srpass::cli::run(argc, argv); }
