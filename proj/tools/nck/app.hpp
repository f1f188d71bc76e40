#pragma once
#include <iosfwd>
#include <string>
#include <vector>

namespace nck::cli {

/// Exit statuses of run().
inline constexpr int exit_ok = 0;
inline constexpr int exit_solver = 1;
inline constexpr int exit_usage = 2;

/// Parses `args` (without the program name), runs the command and writes its
/// table to the --out file or `out`. Diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace nck::cli
