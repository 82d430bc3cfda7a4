#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace disorient::cli {

enum ExitCode : int {
  kDisorientable = 0,
  kNotDisorientable = 1,
  kError = 2,
  kIterationCap = 3,
};

/// Runs one command line (without the program name). Output goes to `out`
/// unless redirected with --out; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace disorient::cli
