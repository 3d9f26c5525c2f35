#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qps {

/// Exit codes of the command line tool.
inline constexpr int kExitPass = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable holding the default worker count of `verify`.
inline constexpr const char* kWorkersEnv = "QPS_WORKERS";

/// Runs one invocation; `args` excludes the program name. Data goes to `out`,
/// diagnostics and progress to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qps
