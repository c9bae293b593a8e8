#pragma once

// Tabular command output with CSV and JSON renderings.

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace qgeo {

using Cell = std::variant<double, std::int64_t, bool, std::string>;

inline constexpr int kSchemaVersion = 1;

struct Document {
  std::vector<std::pair<std::string, Cell>> params;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, Cell>> summary;  // JSON only; CSV writes it as comments

  void add_row(std::vector<Cell> row);
};

/// Doubles use "%.17g". Integers, booleans (true/false) and strings are
/// written verbatim; strings may not contain commas, quotes or newlines.
std::string format_cell(const Cell& c);

/// "# schema=1", then "# key=value" for params and "# summary.key=value" for
/// summary entries, the header row and one line per row. LF line endings.
std::string to_csv(const Document& doc);

/// {"schema":1,"params":{...},"rows":[{...}],"summary":{...}}; summary is
/// omitted when empty.
std::string to_json(const Document& doc);

/// Inverse of to_csv. Each cell is read back as the narrowest type that
/// prints identically: bool, integer, double, then string.
Document parse_csv(const std::string& text);

/// Writes `text` to `path`; throws Error(Io) naming the path on failure.
void write_text(const std::string& path, const std::string& text);

}  // namespace qgeo
