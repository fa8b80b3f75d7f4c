// io.hpp -- lossless number formatting and small file helpers shared by the
// CSV writers and readers.

#pragma once

#include "floquet/common.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace flq {

// Shortest representation that parses back to the same double.
std::string format_double(double v);

// Strict parse (whole token, surrounding spaces allowed); throws Validation.
double parse_double(std::string_view s, const std::string& context);
long parse_int(std::string_view s, const std::string& context);

// Splits on a single-character delimiter (no quoting).
std::vector<std::string> split(std::string_view s, char delim);

std::string trim(std::string_view s);

// Whole file as lines; throws Config when the file cannot be opened.
std::vector<std::string> read_lines(const std::string& path);

} // namespace flq
