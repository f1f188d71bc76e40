#pragma once
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace nck::cli {

/// A cell: missing, integer, real or text.
using Cell = std::variant<std::monostate, long long, double, std::string>;
using Row = std::vector<Cell>;

struct Table {
  std::vector<std::string> columns;
  std::vector<Row> rows;
};

enum class Format { csv, json };

/// Reals as %.12g. CSV: header row, ',' separator, LF endings, missing cells
/// empty. JSON: one array of objects, missing cells null.
void write(const Table& table, Format format, std::ostream& out);

std::string format_real(double v);

} // namespace nck::cli
