#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace skig::util {

struct CsvRow {
  std::vector<std::string> fields;
  size_t line = 0;  // 1-based line of the row's first character
};

// RFC-4180 style parser: quoted fields may contain the delimiter, doubled
// quotes and embedded newlines. Handles \r\n input. delimiter '\t' gives TSV.
std::vector<CsvRow> parse_delimited(std::string_view text, char delimiter);

inline std::vector<CsvRow> parse_csv(std::string_view text) { return parse_delimited(text, ','); }
inline std::vector<CsvRow> parse_tsv(std::string_view text) { return parse_delimited(text, '\t'); }

std::string csv_escape(std::string_view field);

}  // namespace skig::util
