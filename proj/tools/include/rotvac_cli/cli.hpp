#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rotvac::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_domain = 2;
inline constexpr int exit_numeric = 3;
inline constexpr int exit_usage = 64;

/// Parses argv (without the program name), runs one subcommand and writes a
/// single JSON object or CSV table to `out`. Usage messages go to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rotvac::cli
