#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace xtruct {

// One column out of an RFC-4180 file: quoted fields, doubled-quote escapes,
// embedded separators and newlines, CRLF or LF endings.
struct ColumnSpec {
  std::optional<std::size_t> index; // 0-based
  std::string name;                 // used when index is empty (requires header)
};

// "3" selects an index, anything else a header name.
ColumnSpec parse_column_spec(const std::string& spec);

struct ColumnRead {
  std::vector<std::string> values;
  std::size_t rows_read = 0; // data rows visited (header excluded)
};

ColumnRead read_column(const std::string& path, const ColumnSpec& column, bool header,
                       std::size_t max_rows = 0); // 0 = unlimited

// Parses one CSV payload into rows of fields. Errors: malformed_csv with the
// 1-based line where the problem starts.
std::vector<std::vector<std::string>> parse_csv(const std::string& text);

std::string csv_escape(const std::string& field);

} // namespace xtruct
