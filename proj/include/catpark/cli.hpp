#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace catpark {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitUsage = 2,
  kExitResourceLimit = 3,
};

/// Entry point of the `catpark` tool. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace catpark
