#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace innerdist::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kSuccess = 0,
  kVerifiedFalse = 1,
  kUsageError = 2,
  kNonexistent = 3,
};

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace innerdist::cli
