#include "fracint/algebra.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace fracint {

RationalMatrix parse_matrix(std::istream& in) {
  std::string line;
  int line_no = 0;
  long long rows = -1;
  long long cols = -1;
  std::vector<Rational> entries;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream tokens(line);
    if (rows < 0) {
      std::string extra;
      if (!(tokens >> rows >> cols) || (tokens >> extra) || rows < 0 || cols < 0) {
        throw ParseError(line_no, "expected header 'rows cols'");
      }
      continue;
    }
    std::string token;
    while (tokens >> token) {
      try {
        entries.push_back(parse_rational(token));
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
      }
    }
  }
  if (rows < 0) throw ParseError(line_no + 1, "missing header 'rows cols'");
  if (static_cast<long long>(entries.size()) != rows * cols) {
    throw ParseError(line_no, "expected " + std::to_string(rows * cols) + " entries, found " +
                                  std::to_string(entries.size()));
  }
  RationalMatrix m(rows, cols);
  for (long long i = 0; i < rows; ++i) {
    for (long long j = 0; j < cols; ++j) m(i, j) = entries[static_cast<std::size_t>(i * cols + j)];
  }
  return m;
}

RationalMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_matrix(in);
}

void write_matrix(std::ostream& out, const RationalMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out << ' ';
      out << to_string(m(i, j));
    }
    out << '\n';
  }
}

}  // namespace fracint
