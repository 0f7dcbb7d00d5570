#pragma once

#include <string>
#include <vector>

namespace gridfire {

// Minimal CSV helpers for the comma-separated inputs this project reads
// (fuel dictionaries, weather streams, ignitions, model tables, palettes).
// No quoting or escaping; fields are trimmed of surrounding whitespace.

std::string trim(const std::string& s);
std::vector<std::string> split_csv_line(const std::string& line);

// Splits text into non-empty lines, dropping a UTF-8 BOM and trailing '\r'.
std::vector<std::string> csv_lines(const std::string& text);

double to_number(const std::string& field, const std::string& context);
long to_integer(const std::string& field, const std::string& context);

}  // namespace gridfire
