// Copyright 2026 The Judge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ostream>

namespace judge::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kInternalError = 2 };

/// Runs the `judge` command line. Output goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace judge::cli
