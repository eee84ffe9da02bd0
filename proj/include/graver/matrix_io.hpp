#pragma once

#include <iosfwd>

#include "graver/numeric.hpp"

namespace graver {

// Matrix text format: first line "<n_rows> <n_cols>", then n_rows lines of
// n_cols space-separated integers. Errors carry 1-based line numbers.
IntMatrix read_matrix(std::istream& in);
IntMatrix read_matrix_file(const std::string& path);

void write_matrix(std::ostream& out, const IntMatrix& m);

}  // namespace graver
