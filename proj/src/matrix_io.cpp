#include "graver/matrix_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace graver {

namespace {

Int parse_int(const std::string& token, int line_no) {
  mpz_class value;
  if (token.empty() || value.set_str(token, 10) != 0) {
    throw parse_error("line " + std::to_string(line_no) + ": '" + token +
                      "' is not an integer");
  }
  return value;
}

std::vector<std::string> split_tokens(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> tokens;
  std::string tok;
  while (is >> tok) tokens.push_back(tok);
  return tokens;
}

}  // namespace

IntMatrix read_matrix(std::istream& in) {
  std::string line;
  int line_no = 0;

  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!split_tokens(line).empty()) return true;
    }
    return false;
  };

  if (!next_line()) throw parse_error("line 1: missing header '<n_rows> <n_cols>'");
  auto header = split_tokens(line);
  if (header.size() != 2)
    throw parse_error("line " + std::to_string(line_no) +
                      ": header must be '<n_rows> <n_cols>'");
  Int rows_z = parse_int(header[0], line_no);
  Int cols_z = parse_int(header[1], line_no);
  if (rows_z < 1 || cols_z < 1 || !rows_z.fits_sint_p() || !cols_z.fits_sint_p())
    throw parse_error("line " + std::to_string(line_no) +
                      ": dimensions must be positive");
  const Index rows = rows_z.get_si();
  const Index cols = cols_z.get_si();

  IntMatrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    if (!next_line())
      throw parse_error("line " + std::to_string(line_no + 1) + ": expected row " +
                        std::to_string(r + 1) + " of " + std::to_string(rows));
    auto tokens = split_tokens(line);
    if (static_cast<Index>(tokens.size()) != cols)
      throw parse_error("line " + std::to_string(line_no) + ": expected " +
                        std::to_string(cols) + " entries, found " +
                        std::to_string(tokens.size()));
    for (Index c = 0; c < cols; ++c) m(r, c) = parse_int(tokens[c], line_no);
  }
  return m;
}

IntMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open matrix file '" + path + "'");
  return read_matrix(in);
}

void write_matrix(std::ostream& out, const IntMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) {
      if (c > 0) out << ' ';
      out << m(r, c).get_str();
    }
    out << '\n';
  }
}

std::string to_string(const IntVector& v) {
  std::string s;
  for (Index i = 0; i < v.size(); ++i) {
    if (i > 0) s += ' ';
    s += v[i].get_str();
  }
  return s;
}

std::string to_string(const IntMatrix& m) {
  std::string s;
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) {
      if (c > 0) s += ' ';
      s += m(r, c).get_str();
    }
    if (r + 1 < m.rows()) s += '\n';
  }
  return s;
}

}  // namespace graver
