#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crownfree {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitPropertyFails = 2,
  kExitBudget = 3,
};

/// Default for --threads when the flag is absent.
inline constexpr const char* kThreadsEnv = "CROWNFREE_THREADS";

/// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crownfree
