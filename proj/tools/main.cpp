// Copyright 2026 The onefact Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "onefact/cli.hpp"

int main(int argc, char** argv) { return onefact::run_cli(argc, argv, std::cout, std::cerr); }
