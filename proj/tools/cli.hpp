#pragma once

#include <iosfwd>

namespace certsolve::cli {

enum ExitCode : int { kOk = 0, kParse = 2, kUnsupported = 3, kInternal = 4 };

/// Runs one subcommand; JSON goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace certsolve::cli
