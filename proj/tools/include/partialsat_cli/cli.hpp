#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace partialsat::cli {

enum ExitCode : int {
  kOk = 0,
  kFalse = 1,
  kUsage = 2,
  kResource = 3,
};

// Runs one command. argv excludes the program name. Diagnostics go to err.
int run(const std::vector<std::string>& argv, std::ostream& out,
        std::ostream& err);

}  // namespace partialsat::cli
