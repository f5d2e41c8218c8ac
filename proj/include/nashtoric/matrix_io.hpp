#pragma once

#include <iosfwd>
#include <string>

#include "nashtoric/numeric.hpp"

namespace nashtoric {

// Plain-text matrix format: d rows of whitespace-separated integers, columns
// are generators; '#' starts a comment. Throws ParseError naming the line on
// malformed input; requires a rectangular grid with at least d columns.
Mat parse_matrix(std::istream& in);
Mat parse_matrix(const std::string& text);
Mat parse_matrix_file(const std::string& path);

// Right-aligned rows; parse_matrix(format_matrix(m)) reproduces m.
std::string format_matrix(const Mat& m);
std::string format_covector(const Covec& v);
std::string format_vector(const Vec& v);

}  // namespace nashtoric
