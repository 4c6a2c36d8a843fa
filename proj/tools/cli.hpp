#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bcmetric::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCheckFailed = 2;

/// Runs one invocation. args excludes the program name.
/// Exit status: 0 success, 1 usage or IO error, 2 a verification check failed.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bcmetric::cli
