#pragma once

// Minimal CSV support in the RFC 4180 style: comma separator, double-quote
// escaping, UTF-8 passed through untouched. The writer emits '\n' line ends;
// the reader accepts '\n' and "\r\n". A line whose first character is '#'
// (outside any quoted field) can optionally be skipped, which the bundled
// fixture files use for their header comments.

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "zipftk/errors.hpp"

namespace zipftk::csv {

using Row = std::vector<std::string>;

inline std::string escape(const std::string& field) {
  bool needs = field.find_first_of(",\"\r\n") != std::string::npos;
  if (!needs) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline std::string join(const Row& row) {
  std::string out;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += ',';
    out += escape(row[i]);
  }
  return out;
}

inline std::vector<Row> parse(const std::string& text,
                              bool skip_comments = false) {
  std::vector<Row> rows;
  Row row;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;  // row has content beyond an empty first field
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto end_field = [&] {
    row.push_back(field);
    field.clear();
    field_started = false;
  };
  auto end_row = [&] {
    end_field();
    rows.push_back(row);
    row.clear();
  };
  while (i < n) {
    char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < n && text[i + 1] == '"') {
          field += '"';
          i += 2;
        } else {
          in_quotes = false;
          ++i;
        }
      } else {
        field += c;
        ++i;
      }
      continue;
    }
    if (skip_comments && c == '#' && row.empty() && field.empty() &&
        !field_started) {
      while (i < n && text[i] != '\n') ++i;
      if (i < n) ++i;
      continue;
    }
    switch (c) {
      case '"':
        in_quotes = true;
        field_started = true;
        ++i;
        break;
      case ',':
        end_field();
        field_started = true;  // a separator implies the row is real
        ++i;
        break;
      case '\r':
        ++i;
        break;
      case '\n':
        end_row();
        ++i;
        break;
      default:
        field += c;
        field_started = true;
        ++i;
        break;
    }
  }
  if (in_quotes) throw ParseError("csv: unterminated quoted field");
  if (!field.empty() || !row.empty() || field_started) end_row();
  return rows;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("csv: cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<Row> read_file(const std::string& path,
                                  bool skip_comments = false) {
  return parse(slurp(path), skip_comments);
}

inline void write_file(const std::string& path, const std::vector<Row>& rows,
                       const std::string& preamble = "") {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("csv: cannot write " + path);
  if (!preamble.empty()) out << preamble;
  for (const Row& r : rows) out << join(r) << '\n';
}

// Strict numeric field parser; rejects trailing junk.
inline double to_double(const std::string& s) {
  if (s.empty()) throw ParseError("csv: empty numeric field");
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size())
    throw ParseError("csv: bad number '" + s + "'");
  return v;
}

inline long long to_int(const std::string& s) {
  if (s.empty()) throw ParseError("csv: empty integer field");
  char* end = nullptr;
  long long v = std::strtoll(s.c_str(), &end, 10);
  if (end != s.c_str() + s.size())
    throw ParseError("csv: bad integer '" + s + "'");
  return v;
}

}  // namespace zipftk::csv
