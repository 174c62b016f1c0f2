#pragma once

#include "whf/polynomial.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace whf {

// Shortest representation that parses back to the same double.
std::string format_double(double v);
std::string format_complex(cplx z);   // "re,im"

double parse_double(std::string_view s);
cplx parse_complex(std::string_view s);

std::string_view trim(std::string_view s);
std::vector<std::string_view> split(std::string_view s, char sep);

std::string read_file(const std::string& path);
// Temp file in the target directory followed by rename.
void write_file_atomic(const std::string& path, const std::string& content);

} // namespace whf
