#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace radmap::cli {

/// Runs one CLI invocation; returns the process exit code.
/// 0: success (all checks in range), 1: a verification check failed,
/// 2: usage or domain error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace radmap::cli
