#include "nashtoric/matrix_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace nashtoric {

namespace {

bool is_integer_token(const std::string& tok) {
  std::size_t i = 0;
  if (tok[0] == '+' || tok[0] == '-') i = 1;
  if (i == tok.size()) return false;
  for (; i < tok.size(); ++i)
    if (tok[i] < '0' || tok[i] > '9') return false;
  return true;
}

}  // namespace

Mat parse_matrix(std::istream& in) {
  std::vector<std::vector<Int>> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::vector<Int> row;
    std::string tok;
    while (tokens >> tok) {
      if (!is_integer_token(tok))
        throw ParseError("matrix parse error at line " +
                         std::to_string(lineno) + ": '" + tok +
                         "' is not an integer");
      row.emplace_back(tok);
    }
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError("matrix parse error at line " + std::to_string(lineno) +
                       ": row has " + std::to_string(row.size()) +
                       " entries, expected " +
                       std::to_string(rows.front().size()));
    rows.push_back(std::move(row));
  }
  if (rows.empty())
    throw ParseError("matrix parse error: no rows found");
  if (rows.front().size() < rows.size())
    throw ParseError("matrix parse error: " + std::to_string(rows.size()) +
                     " rows need at least as many columns, got " +
                     std::to_string(rows.front().size()));
  Mat m(static_cast<Index>(rows.size()),
        static_cast<Index>(rows.front().size()));
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return m;
}

Mat parse_matrix(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix(in);
}

Mat parse_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open matrix file '" + path + "'");
  return parse_matrix(in);
}

std::string format_matrix(const Mat& m) {
  std::size_t width = 0;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      width = std::max(width, m(i, j).get_str().size());
  std::ostringstream out;
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      const std::string s = m(i, j).get_str();
      if (j) out << ' ';
      out << std::string(width - s.size(), ' ') << s;
    }
    out << '\n';
  }
  return out.str();
}

std::string format_covector(const Covec& v) {
  std::ostringstream out;
  out << '(';
  for (Index i = 0; i < v.size(); ++i) {
    if (i) out << ", ";
    out << v(i).get_str();
  }
  out << ')';
  return out.str();
}

std::string format_vector(const Vec& v) {
  std::ostringstream out;
  out << '(';
  for (Index i = 0; i < v.size(); ++i) {
    if (i) out << ", ";
    out << v(i).get_str();
  }
  out << ')';
  return out.str();
}

}  // namespace nashtoric
