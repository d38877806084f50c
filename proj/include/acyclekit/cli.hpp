#pragma once

#include <iosfwd>

namespace acyclekit {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitError = 1, kExitAssertion = 2 };

/// Entry point of the `acyclekit` tool, with its streams injected so the
/// tests can drive it in-process.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace acyclekit
