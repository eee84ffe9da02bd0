#pragma once

#include <vector>

#include "graver/numeric.hpp"

namespace graver {

// Lattice basis of ker_Z(m) = {x : m·x = 0}, computed by a unimodular
// column transformation into Hermite form. The basis is saturated: every
// integer kernel vector is an integer combination of the returned vectors.
// A full-column-rank matrix yields the empty list.
std::vector<IntVector> integer_kernel_basis(const IntMatrix& m);

// Rank over the rationals, by fraction-free (Bareiss) elimination.
Index rank(const IntMatrix& m);

// gcd of the absolute values of the entries; 0 for the zero vector.
// Accepts any Eigen expression over mpz_class.
template <typename Derived>
Int gcd_of(const Eigen::MatrixBase<Derived>& v) {
  Int g = 0;
  for (Index i = 0; i < v.rows(); ++i)
    for (Index j = 0; j < v.cols(); ++j) {
      g = gcd(g, Int(v(i, j)));
      if (g == 1) return g;
    }
  return g;
}

}  // namespace graver
