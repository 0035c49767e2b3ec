#include "csv.hpp"

#include <fstream>
#include <sstream>

#include "error.hpp"

namespace xtruct {

ColumnSpec parse_column_spec(const std::string& spec) {
  ColumnSpec c;
  if (!spec.empty() && spec.find_first_not_of("0123456789") == std::string::npos) {
    c.index = std::stoul(spec);
  } else {
    c.name = spec;
  }
  return c;
}

namespace {

struct CsvRow {
  std::vector<std::string> fields;
  std::size_t line = 1;
};

std::vector<CsvRow> parse_rows(const std::string& text) {
  std::vector<CsvRow> rows;
  std::vector<std::string> fields;
  std::string field;
  std::size_t line = 1, row_line = 1;
  bool row_has_chars = false;
  std::size_t i = 0, n = text.size();

  auto end_field = [&] {
    fields.push_back(std::move(field));
    field.clear();
  };
  auto end_row = [&] {
    end_field();
    if (row_has_chars) rows.push_back({std::move(fields), row_line});
    fields.clear();
    row_has_chars = false;
  };

  while (i < n) {
    char c = text[i];
    if (c == '"') {
      if (!field.empty())
        fail(Errc::malformed_csv, "quote inside unquoted field", long(line));
      std::size_t open_line = line;
      ++i;
      row_has_chars = true;
      bool closed = false;
      while (i < n) {
        char q = text[i];
        if (q == '"') {
          if (i + 1 < n && text[i + 1] == '"') {
            field.push_back('"');
            i += 2;
            continue;
          }
          ++i;
          closed = true;
          break;
        }
        if (q == '\n') ++line;
        field.push_back(q);
        ++i;
      }
      if (!closed) fail(Errc::malformed_csv, "unterminated quoted field", long(open_line));
      if (i < n && text[i] != ',' && text[i] != '\n' && text[i] != '\r')
        fail(Errc::malformed_csv, "data after closing quote", long(line));
      continue;
    }
    if (c == ',') {
      end_field();
      row_has_chars = true;
      ++i;
      continue;
    }
    if (c == '\r' || c == '\n') {
      end_row();
      if (c == '\r' && i + 1 < n && text[i + 1] == '\n') ++i;
      ++i;
      ++line;
      row_line = line;
      continue;
    }
    field.push_back(c);
    row_has_chars = true;
    ++i;
  }
  if (row_has_chars || !field.empty() || !fields.empty()) end_row();
  return rows;
}

} // namespace

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> out;
  for (auto& r : parse_rows(text)) out.push_back(std::move(r.fields));
  return out;
}

ColumnRead read_column(const std::string& path, const ColumnSpec& column, bool header,
                       std::size_t max_rows) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::file_not_found, "cannot open: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  std::vector<CsvRow> rows = parse_rows(ss.str());

  std::size_t start = 0;
  std::size_t index = 0;
  if (column.index) {
    index = *column.index;
  } else {
    if (!header)
      fail(Errc::column_not_found, "column '" + column.name + "' needs a header row");
    if (rows.empty()) fail(Errc::column_not_found, "no header row in " + path);
    const auto& head = rows[0].fields;
    bool found = false;
    for (std::size_t i = 0; i < head.size(); ++i) {
      if (head[i] == column.name) {
        index = i;
        found = true;
        break;
      }
    }
    if (!found) fail(Errc::column_not_found, "no column named '" + column.name + "'");
  }
  if (header && !rows.empty()) {
    if (index >= rows[0].fields.size())
      fail(Errc::column_not_found, "column index " + std::to_string(index) + " out of range");
    start = 1;
  }

  ColumnRead out;
  for (std::size_t r = start; r < rows.size(); ++r) {
    if (max_rows && out.values.size() >= max_rows) break;
    if (index >= rows[r].fields.size())
      fail(Errc::malformed_csv, "row is missing column " + std::to_string(index),
           long(rows[r].line));
    out.values.push_back(rows[r].fields[index]);
    ++out.rows_read;
  }
  return out;
}

std::string csv_escape(const std::string& field) {
  bool needs = field.find_first_of(",\"\r\n") != std::string::npos;
  if (!needs) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out.push_back('"');
  return out;
}

} // namespace xtruct
