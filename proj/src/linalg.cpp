#include "graver/linalg.hpp"

namespace graver {

namespace {

// Unimodular 2x2 column operation sending (col a, col b) to
// (p·a + q·b, -(br/g)·a + (ar/g)·b), which puts gcd(ar, br) into the pivot
// entry and zeroes the other. Determinant is +1.
void combine_columns(IntMatrix& m, IntMatrix& u, Index pivot_col, Index other_col,
                     Index row) {
  const Int a = m(row, pivot_col);
  const Int b = m(row, other_col);
  Int g, p, q;
  mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  const Int a_div = a / g;
  const Int b_div = b / g;

  IntVector mc = p * m.col(pivot_col) + q * m.col(other_col);
  IntVector md = a_div * m.col(other_col) - b_div * m.col(pivot_col);
  m.col(pivot_col) = mc;
  m.col(other_col) = md;

  IntVector uc = p * u.col(pivot_col) + q * u.col(other_col);
  IntVector ud = a_div * u.col(other_col) - b_div * u.col(pivot_col);
  u.col(pivot_col) = uc;
  u.col(other_col) = ud;
}

}  // namespace

std::vector<IntVector> integer_kernel_basis(const IntMatrix& m) {
  const Index rows = m.rows();
  const Index cols = m.cols();
  IntMatrix work = m;
  IntMatrix u = IntMatrix::Identity(cols, cols);

  Index next_pivot = 0;
  for (Index r = 0; r < rows && next_pivot < cols; ++r) {
    Index pivot = -1;
    for (Index c = next_pivot; c < cols; ++c) {
      if (work(r, c) != 0) {
        pivot = c;
        break;
      }
    }
    if (pivot < 0) continue;
    for (Index c = pivot + 1; c < cols; ++c) {
      if (work(r, c) != 0) combine_columns(work, u, pivot, c, r);
    }
    if (pivot != next_pivot) {
      work.col(pivot).swap(work.col(next_pivot));
      u.col(pivot).swap(u.col(next_pivot));
    }
    ++next_pivot;
  }

  std::vector<IntVector> basis;
  basis.reserve(cols - next_pivot);
  for (Index c = next_pivot; c < cols; ++c) basis.push_back(u.col(c));
  return basis;
}

Index rank(const IntMatrix& m) {
  IntMatrix work = m;
  const Index rows = work.rows();
  const Index cols = work.cols();
  Int prev_pivot = 1;
  Index r = 0;

  for (Index c = 0; c < cols && r < rows; ++c) {
    Index pivot_row = -1;
    for (Index i = r; i < rows; ++i) {
      if (work(i, c) != 0) {
        pivot_row = i;
        break;
      }
    }
    if (pivot_row < 0) continue;
    if (pivot_row != r) work.row(pivot_row).swap(work.row(r));

    // Bareiss step: exact division by the previous pivot.
    for (Index i = r + 1; i < rows; ++i) {
      for (Index j = c + 1; j < cols; ++j) {
        work(i, j) = (work(r, c) * work(i, j) - work(i, c) * work(r, j)) / prev_pivot;
      }
      work(i, c) = 0;
    }
    prev_pivot = work(r, c);
    ++r;
  }
  return r;
}

}  // namespace graver
