#pragma once

#include <cstdint>
#include <vector>

#include "graver/numeric.hpp"

namespace graver {

// Conformal order: u ⊑ v iff |u_i| <= |v_i| and u_i·v_i >= 0 for all i.
// Accepts any pair of equal-length Eigen expressions over mpz_class.
template <typename DU, typename DV>
bool conforms(const Eigen::MatrixBase<DU>& u, const Eigen::MatrixBase<DV>& v) {
  if (u.size() != v.size())
    throw std::invalid_argument("conforms: length mismatch");
  for (Index i = 0; i < u.size(); ++i) {
    const Int& a = u(i);
    const Int& b = v(i);
    if (sgn(a) * sgn(b) < 0) return false;
    if (abs(a) > abs(b)) return false;
  }
  return true;
}

// The set of conformal-minimal nonzero kernel vectors of source_matrix.
// Elements are stored with both signs, sorted lexicographically.
struct GraverBasis {
  IntMatrix source_matrix;
  std::vector<IntVector> elements;

  bool operator==(const GraverBasis& other) const {
    return elements == other.elements;
  }
  Index size() const { return static_cast<Index>(elements.size()); }
};

struct CompletionLimits {
  std::size_t max_elements = 100000;
  std::uint64_t max_pair_reductions = 10'000'000;
};

// Completion (normal-form) algorithm: seed with ± a kernel lattice basis,
// reduce pairwise sums to conformal normal form until fixpoint, then sweep
// out non-minimal elements. Throws resource_limit_error when the caps are
// exceeded; a truncated basis is never returned.
GraverBasis graver_basis(const IntMatrix& a, const CompletionLimits& limits = {});

// Independent oracle: enumerate every nonzero vector of [-bound, bound]^n
// in ker_Z(a) and keep the conformal-minimal ones. Agrees with
// graver_basis(a) whenever the true basis fits inside the box.
GraverBasis graver_basis_oracle(const IntMatrix& a, const Int& bound,
                                std::uint64_t max_enumeration = 100'000'000);

// h-th Lawrence lifting: h diagonal copies of a stacked over a band of h
// horizontally repeated t×t identities; shape (t + h·s) × (h·t).
IntMatrix lawrence_lift(const IntMatrix& a, Index h);

// A vector split into block_count contiguous blocks of block_size entries.
struct BlockVector {
  IntVector data;
  Index block_size = 0;
  Index block_count = 0;

  BlockVector(IntVector values, Index size, Index count)
      : data(std::move(values)), block_size(size), block_count(count) {
    if (block_size < 1 || block_count < 1 ||
        data.size() != block_size * block_count)
      throw std::invalid_argument("BlockVector: length != block_size * block_count");
  }
};

// Number of nonzero blocks.
Index type_of(const BlockVector& x);

// Graver complexity via the Graver-of-Graver characterization: the maximum
// 1-norm over the Graver basis of the matrix whose columns are the elements
// of G(a) in canonical (lexicographic) order. 0 when G(a) is empty.
Int graver_complexity(const IntMatrix& a, const CompletionLimits& limits = {});

}  // namespace graver
