#include "graver/graver.hpp"

#include <algorithm>
#include <deque>
#include <utility>

#include "graver/linalg.hpp"

namespace graver {

namespace {

// Subtract conforming elements until none applies (or s reaches zero).
// Every subtraction strictly decreases the 1-norm, so this terminates.
IntVector normal_form(IntVector s, const std::vector<IntVector>& elements,
                      std::uint64_t& reductions, std::uint64_t reduction_cap) {
  bool changed = true;
  while (changed && !is_zero(s)) {
    changed = false;
    for (const IntVector& g : elements) {
      if (conforms(g, s)) {
        s -= g;
        if (++reductions > reduction_cap)
          throw resource_limit_error("graver_basis: pair-reduction cap exceeded");
        changed = true;
        break;
      }
    }
  }
  return s;
}

std::vector<IntVector> minimal_elements(std::vector<IntVector> vectors) {
  // Strict domination u ⊑ v (u ≠ v) forces |u|_1 < |v|_1, so sorting by
  // 1-norm lets each scan stop early.
  std::sort(vectors.begin(), vectors.end(), [](const IntVector& a, const IntVector& b) {
    Int na = one_norm(a), nb = one_norm(b);
    if (na != nb) return na < nb;
    return lex_less(a, b);
  });
  std::vector<Int> norms;
  norms.reserve(vectors.size());
  for (const IntVector& v : vectors) norms.push_back(one_norm(v));

  std::vector<IntVector> kept;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < i && norms[j] < norms[i]; ++j) {
      if (conforms(vectors[j], vectors[i])) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(std::move(vectors[i]));
  }
  std::sort(kept.begin(), kept.end(), lex_less);
  return kept;
}

}  // namespace

GraverBasis graver_basis(const IntMatrix& a, const CompletionLimits& limits) {
  std::vector<IntVector> elements;
  for (const IntVector& b : integer_kernel_basis(a)) {
    elements.push_back(b);
    elements.push_back(-b);
  }

  std::deque<std::pair<std::size_t, std::size_t>> queue;
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) queue.emplace_back(i, j);

  std::uint64_t reductions = 0;
  while (!queue.empty()) {
    auto [i, j] = queue.front();
    queue.pop_front();
    IntVector s =
        normal_form(elements[i] + elements[j], elements, reductions,
                    limits.max_pair_reductions);
    if (is_zero(s)) continue;

    for (IntVector v : {s, IntVector(-s)}) {
      elements.push_back(std::move(v));
      const std::size_t n = elements.size() - 1;
      if (elements.size() > limits.max_elements)
        throw resource_limit_error("graver_basis: element cap exceeded");
      for (std::size_t k = 0; k <= n; ++k) queue.emplace_back(n, k);
    }
  }

  return GraverBasis{a, minimal_elements(std::move(elements))};
}

GraverBasis graver_basis_oracle(const IntMatrix& a, const Int& bound,
                                std::uint64_t max_enumeration) {
  if (bound < 1) throw std::invalid_argument("graver_basis_oracle: bound must be >= 1");
  const Index n = a.cols();
  Int box_size = 1;
  for (Index i = 0; i < n; ++i) box_size *= 2 * bound + 1;
  if (box_size > Int(max_enumeration))
    throw resource_limit_error("graver_basis_oracle: enumeration budget exceeded");

  const long b = bound.get_si();
  std::vector<long> v(n, -b);
  IntVector row_sums(a.rows());
  for (Index r = 0; r < a.rows(); ++r) {
    row_sums[r] = 0;
    for (Index c = 0; c < n; ++c) row_sums[r] += a(r, c) * Int(-b);
  }

  std::vector<IntVector> kernel_vectors;
  while (true) {
    if ((row_sums.array() == Int(0)).all() &&
        std::any_of(v.begin(), v.end(), [](long x) { return x != 0; })) {
      IntVector w(n);
      for (Index i = 0; i < n; ++i) w[i] = v[i];
      kernel_vectors.push_back(std::move(w));
    }
    // Odometer step with incremental row-sum updates.
    Index pos = 0;
    while (pos < n && v[pos] == b) {
      row_sums -= Int(2 * b) * a.col(pos);
      v[pos] = -b;
      ++pos;
    }
    if (pos == n) break;
    v[pos] += 1;
    row_sums += a.col(pos);
  }

  return GraverBasis{a, minimal_elements(std::move(kernel_vectors))};
}

IntMatrix lawrence_lift(const IntMatrix& a, Index h) {
  if (h < 1) throw std::invalid_argument("lawrence_lift: h must be >= 1");
  const Index s = a.rows();
  const Index t = a.cols();
  IntMatrix lift = IntMatrix::Zero(t + h * s, h * t);
  for (Index b = 0; b < h; ++b) {
    lift.block(b * s, b * t, s, t) = a;
    lift.block(h * s, b * t, t, t) = IntMatrix::Identity(t, t);
  }
  return lift;
}

Index type_of(const BlockVector& x) {
  Index count = 0;
  for (Index b = 0; b < x.block_count; ++b) {
    if (!(x.data.segment(b * x.block_size, x.block_size).array() == Int(0)).all())
      ++count;
  }
  return count;
}

Int graver_complexity(const IntMatrix& a, const CompletionLimits& limits) {
  const GraverBasis g = graver_basis(a, limits);
  if (g.elements.empty()) return 0;

  IntMatrix columns(a.cols(), g.size());
  for (Index k = 0; k < g.size(); ++k) columns.col(k) = g.elements[k];

  const GraverBasis gg = graver_basis(columns, limits);
  Int max_norm = 0;
  for (const IntVector& x : gg.elements) max_norm = std::max(max_norm, one_norm(x));
  return max_norm;
}

}  // namespace graver
