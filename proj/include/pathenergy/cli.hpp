#pragma once

#include <iosfwd>

namespace pathenergy::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kSuccess = 0,
  kViolation = 1,
  kInputError = 2,
  kCounterexample = 3,
};

/// Runs the command line `argv[0] <subcommand> ...`, writing documents to
/// `out` and diagnostics to `err`. Standard input is read from `in` when a
/// subcommand is given `-` as its input.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace pathenergy::cli
