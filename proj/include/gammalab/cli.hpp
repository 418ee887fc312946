#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gammalab {

  // Runs the command line `args` (without the program name). Returns the
  // process exit code: 0 success or property holds, 1 property fails,
  // 2 usage, parse or validation error.
  int run_cli(std::vector<std::string> const& args,
              std::ostream&                   out,
              std::ostream&                   err);

}  // namespace gammalab
