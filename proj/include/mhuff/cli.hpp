#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mhuff::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_mismatch = 1;
inline constexpr int exit_usage = 2;

/// Parses `args` (without the program name), runs the subcommand and returns its exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Directory holding table1.csv, table2.csv and polynomials.txt unless --golden-dir overrides it.
std::string default_golden_dir();

}  // namespace mhuff::cli
