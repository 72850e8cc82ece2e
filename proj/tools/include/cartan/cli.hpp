#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cartan::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_mismatch = 1;
inline constexpr int exit_usage = 2;

/// Runs one subcommand. `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cartan::cli
