#pragma once

#include <iosfwd>

namespace homconf::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInput = 2,
  kVerificationFailed = 3,
  kInternal = 4,
};

/// Runs the command line; output goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace homconf::cli
