#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gstein::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kSuccess = 0,
  kCheckFailed = 1,  // verification or cross-check failure, non-convergence, internal error
  kUsageError = 2,
};

/// Runs `gstein <args...>` writing to the given streams; args excludes the
/// program name. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gstein::cli
