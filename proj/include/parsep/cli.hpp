#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace parsep::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // domain error or failed verification
inline constexpr int kExitUsage = 2;

/// Runs one command line. `args` excludes the program name. Data goes to
/// `out`, diagnostics to `err`; the return value is the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace parsep::cli
