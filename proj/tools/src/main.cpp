// Copyright 2026 The palrat Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "palrat/cli.hpp"

int main(int argc, char** argv) {
  return palrat::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
