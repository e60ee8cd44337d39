// cli.hpp
// Command-line entry point, callable in-process for tests.

#ifndef RESGRAPH_CLI_HPP
#define RESGRAPH_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace resgraph::cli {

enum ExitStatus : int {
  kSuccess = 0,
  kInvalidGraph = 1,
  kHypothesisNotSatisfied = 2,
  kUsageError = 3,
  kVerificationFailed = 4,
};

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace resgraph::cli

#endif  // RESGRAPH_CLI_HPP
