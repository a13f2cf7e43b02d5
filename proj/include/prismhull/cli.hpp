#ifndef PRISMHULL_CLI_HPP
#define PRISMHULL_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace prismhull {

enum ExitStatus : int {
  exit_ok = 0,
  exit_internal = 1,
  exit_parse = 2,
  exit_range = 3,
  exit_cap = 4,
  exit_verify_failed = 5,
};

/// Runs one command line (without the program name). Results go to `out`
/// unless --out names a file; diagnostics are one line on `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace prismhull

#endif
