// Copyright 2026 The onefact Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>

namespace onefact {

/// Exit codes: 0 every check passed, 1 a mathematical counterexample was
/// found, 2 usage or input error.
enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2 };

/// Entry point of the `onefact` tool, with injectable streams for tests.
/// Reports go to `out`; progress and errors go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace onefact
