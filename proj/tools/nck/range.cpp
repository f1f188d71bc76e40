#include "nck/range.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace nck::cli {

namespace {

constexpr std::size_t max_points = 10'000'000;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view text, std::string_view whole) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty() || !std::isfinite(v))
    throw std::invalid_argument("bad number '" + std::string(text) + "' in '" + std::string(whole) + "'");
  return v;
}

} // namespace

std::vector<double> parse_range(std::string_view text) {
  const std::string_view whole = text;
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty range");

  if (text.find(':') == std::string_view::npos) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (true) {
      const std::size_t comma = text.find(',', pos);
      out.push_back(parse_number(text.substr(pos, comma - pos), whole));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return out;
  }

  const std::size_t c1 = text.find(':');
  const std::size_t c2 = text.find(':', c1 + 1);
  if (c2 == std::string_view::npos || text.find(':', c2 + 1) != std::string_view::npos)
    throw std::invalid_argument("range '" + std::string(whole) + "' is not start:stop:step");
  const double start = parse_number(text.substr(0, c1), whole);
  const double stop = parse_number(text.substr(c1 + 1, c2 - c1 - 1), whole);
  const double step = parse_number(text.substr(c2 + 1), whole);
  if (!(step > 0.0)) throw std::invalid_argument("range '" + std::string(whole) + "' needs step > 0");
  if (stop < start) throw std::invalid_argument("range '" + std::string(whole) + "' has stop < start");

  const double span = (stop - start) / step;
  if (span >= static_cast<double>(max_points))
    throw std::invalid_argument("range '" + std::string(whole) + "' has too many points");
  // tolerate rounding in (stop - start)/step so the endpoint is kept
  const auto count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = start + static_cast<double>(i) * step;
  return out;
}

std::vector<int> parse_int_range(std::string_view text) {
  std::vector<int> out;
  for (double v : parse_range(text)) {
    const double r = std::round(v);
    if (std::abs(v - r) > 1e-9 || r < 0.0 || r > 1e6)
      throw std::invalid_argument("'" + std::string(text) + "' must list non-negative integers");
    out.push_back(static_cast<int>(r));
  }
  return out;
}

} // namespace nck::cli
