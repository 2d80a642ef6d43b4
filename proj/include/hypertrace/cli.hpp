#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hypertrace::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitResource = 2,
  kExitInconsistent = 3,
};

// Entry point shared by the hypertrace binary and the tests. `args` includes
// the program name. Reports go to `out` (or --out), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// HYPERTRACE_BUDGET when set and valid, otherwise the built-in default.
std::uint64_t default_budget();

}  // namespace hypertrace::cli
