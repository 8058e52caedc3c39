#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sanecol::cli {

enum ExitCode : int {
  kSuccess = 0,     ///< success, or decision true
  kNegative = 1,    ///< decision false
  kUsage = 2,       ///< bad flags or unreadable/malformed input
  kTimeout = 3,     ///< solver budget exhausted
  kInvariant = 4,   ///< internal invariant violation
};

/// Runs one CLI invocation; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sanecol::cli
