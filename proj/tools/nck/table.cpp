#include "nck/table.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>

namespace nck::cli {

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v); // no "-0"
  return buf;
}

namespace {

std::string csv_field(const Cell& c) {
  struct {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_real(v); }
    std::string operator()(const std::string& s) const {
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string q = "\"";
      for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
      }
      return q + '"';
    }
  } visit;
  return std::visit(visit, c);
}

nlohmann::ordered_json json_value(const Cell& c) {
  struct {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(long long v) const { return v; }
    nlohmann::ordered_json operator()(double v) const {
      if (!std::isfinite(v)) return nullptr;
      // same 12 significant digits as the CSV
      return std::strtod(format_real(v).c_str(), nullptr);
    }
    nlohmann::ordered_json operator()(const std::string& s) const { return s; }
  } visit;
  return std::visit(visit, c);
}

} // namespace

void write(const Table& table, Format format, std::ostream& out) {
  if (format == Format::csv) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
    out << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
      out << '\n';
    }
    return;
  }
  auto arr = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < table.columns.size(); ++i)
      obj[table.columns[i]] = i < row.size() ? json_value(row[i]) : nullptr;
    arr.push_back(std::move(obj));
  }
  out << arr.dump(1) << '\n';
}

} // namespace nck::cli
