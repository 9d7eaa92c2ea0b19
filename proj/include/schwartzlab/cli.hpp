#pragma once

#include <iosfwd>

namespace schwartzlab {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2 };

/// Entry point of the `schwartzlab` tool: run | convergence | list.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace schwartzlab
