#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sforge {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitPrecondition = 3;

/// Runs one `sforge` invocation. `args` excludes the program name. Reports go
/// to `out`, diagnostics to `err`; the return value is the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sforge
