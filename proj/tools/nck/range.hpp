#pragma once
#include <string>
#include <string_view>
#include <vector>

namespace nck::cli {

/// Parses "start:stop:step", a single value, or a comma list.
/// Throws std::invalid_argument on malformed or unbounded input.
std::vector<double> parse_range(std::string_view text);

/// As parse_range, but every value must be a non-negative integer.
std::vector<int> parse_int_range(std::string_view text);

} // namespace nck::cli
