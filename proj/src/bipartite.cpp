#include "graver/bipartite.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

#include "graver/graver.hpp"

namespace graver {

namespace {

void validate_walk(const CircuitWalk& walk) {
  const auto& [shape, pairs] = walk;
  const int l = static_cast<int>(pairs.size());
  if (l < 2) throw std::invalid_argument("circuit walk needs at least 2 pairs");
  std::vector<bool> seen_v(shape.t, false), seen_u(shape.r, false);
  for (const auto& [i, j] : pairs) {
    if (i < 1 || i > shape.t || j < 1 || j > shape.r)
      throw std::invalid_argument("walk vertex index out of range");
    if (seen_v[i - 1] || seen_u[j - 1])
      throw std::invalid_argument("repeated vertex in walk");
    seen_v[i - 1] = true;
    seen_u[j - 1] = true;
  }
}

// Reconstructs the vertex sequence, or explains why the matrix is not a
// circuit. Used by both is_circuit and matrix_to_walk.
std::optional<CircuitWalk> try_walk(const CircuitMatrix& circuit,
                                    std::string* why = nullptr) {
  const auto& shape = circuit.shape;
  const IntMatrix& e = circuit.entries;
  auto fail = [&](const std::string& msg) -> std::optional<CircuitWalk> {
    if (why) *why = msg;
    return std::nullopt;
  };
  if (e.rows() != shape.t || e.cols() != shape.r)
    return fail("entries are " + std::to_string(e.rows()) + "x" +
                std::to_string(e.cols()) + ", expected " + std::to_string(shape.t) +
                "x" + std::to_string(shape.r));

  // plus_col[i] / minus_col[i]: the unique +1 / -1 column of row i;
  // minus_row[j]: the unique -1 row of column j.
  std::vector<Index> plus_col(shape.t, -1), minus_col(shape.t, -1);
  std::vector<Index> plus_row(shape.r, -1), minus_row(shape.r, -1);
  Index support_rows = 0;

  for (Index i = 0; i < shape.t; ++i) {
    for (Index j = 0; j < shape.r; ++j) {
      const Int& a = e(i, j);
      if (a == 0) continue;
      if (a == 1) {
        if (plus_col[i] >= 0 || plus_row[j] >= 0)
          return fail("row " + std::to_string(i + 1) + " or column " +
                      std::to_string(j + 1) + " has more than one +1");
        plus_col[i] = j;
        plus_row[j] = i;
      } else if (a == -1) {
        if (minus_col[i] >= 0 || minus_row[j] >= 0)
          return fail("row " + std::to_string(i + 1) + " or column " +
                      std::to_string(j + 1) + " has more than one -1");
        minus_col[i] = j;
        minus_row[j] = i;
      } else {
        return fail("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                    ") = " + a.get_str() + " outside {-1,0,1}");
      }
    }
  }

  Index start = -1;
  for (Index i = 0; i < shape.t; ++i) {
    const bool has_plus = plus_col[i] >= 0;
    const bool has_minus = minus_col[i] >= 0;
    if (has_plus != has_minus)
      return fail("row " + std::to_string(i + 1) + " sum is nonzero");
    if (has_plus) {
      ++support_rows;
      if (start < 0) start = i;
    }
  }
  for (Index j = 0; j < shape.r; ++j) {
    if ((plus_row[j] >= 0) != (minus_row[j] >= 0))
      return fail("column " + std::to_string(j + 1) + " sum is nonzero");
  }
  if (support_rows == 0) return fail("zero matrix");

  // Follow +1 edges forward and -1 edges back; a circuit closes after
  // exactly support_rows steps.
  std::vector<std::pair<int, int>> pairs;
  Index i = start;
  do {
    const Index j = plus_col[i];
    pairs.emplace_back(static_cast<int>(i + 1), static_cast<int>(j + 1));
    i = minus_row[j];
    if (static_cast<Index>(pairs.size()) > support_rows)
      return fail("support is not a single cycle");
  } while (i != start);
  if (static_cast<Index>(pairs.size()) != support_rows)
    return fail("support is not a single cycle");

  return CircuitWalk{shape, std::move(pairs)};
}

}  // namespace

IntMatrix incidence_matrix(const BipartiteShape& shape) {
  IntMatrix ones(1, shape.t);
  ones.setConstant(1);
  return lawrence_lift(ones, shape.r);
}

CircuitMatrix walk_to_matrix(const CircuitWalk& walk) {
  validate_walk(walk);
  const auto& [shape, pairs] = walk;
  const int l = static_cast<int>(pairs.size());
  IntMatrix e = IntMatrix::Zero(shape.t, shape.r);
  for (int a = 0; a < l; ++a) {
    const auto& [i, j] = pairs[a];
    const int i_next = pairs[(a + 1) % l].first;
    e(i - 1, j - 1) = 1;
    e(i_next - 1, j - 1) = -1;
  }
  return CircuitMatrix{shape, std::move(e)};
}

CircuitWalk matrix_to_walk(const CircuitMatrix& circuit) {
  std::string why;
  auto walk = try_walk(circuit, &why);
  if (!walk) throw std::invalid_argument("not a circuit matrix: " + why);
  return *walk;
}

CircuitWalk normalized(const CircuitWalk& walk) {
  validate_walk(walk);
  auto pairs = walk.pairs;
  auto min_it = std::min_element(pairs.begin(), pairs.end());
  std::rotate(pairs.begin(), min_it, pairs.end());
  return CircuitWalk{walk.shape, std::move(pairs)};
}

bool is_circuit(const CircuitMatrix& circuit) {
  return try_walk(circuit).has_value();
}

bool is_circuit(const IntVector& x, const BipartiteShape& shape) {
  if (x.size() != shape.t * shape.r)
    throw std::invalid_argument("is_circuit: vector length != t*r");
  return is_circuit(circuit_from_vector(x, shape));
}

IntVector circuit_to_vector(const CircuitMatrix& circuit) {
  return Eigen::Map<const IntVector>(circuit.entries.data(),
                                     circuit.entries.size());
}

CircuitMatrix circuit_from_vector(const IntVector& x, const BipartiteShape& shape) {
  if (x.size() != shape.t * shape.r)
    throw std::invalid_argument("circuit_from_vector: vector length != t*r");
  IntMatrix e(shape.t, shape.r);
  Eigen::Map<IntVector>(e.data(), e.size()) = x;
  return CircuitMatrix{shape, std::move(e)};
}

std::vector<CircuitMatrix> enumerate_circuits(const BipartiteShape& shape,
                                              std::uint64_t max_count) {
  const Index l_max = std::min(shape.t, shape.r);

  // Signed circuits of length l: C(t,l)·C(r,l)·(l-1)!·l!.
  Int total = 0;
  for (Index l = 2; l <= l_max; ++l) {
    Int binom_t = 1, binom_r = 1, fact = 1, fact1 = 1;
    for (Index i = 1; i <= l; ++i) {
      binom_t = binom_t * Int(shape.t - i + 1) / Int(i);
      binom_r = binom_r * Int(shape.r - i + 1) / Int(i);
      fact *= i;
      if (i < l) fact1 *= i;
    }
    total += binom_t * binom_r * fact * fact1;
  }
  if (total > Int(max_count))
    throw resource_limit_error("enumerate_circuits: " + total.get_str() +
                               " circuits exceed budget");

  std::vector<CircuitWalk> walks;
  std::vector<int> v_all(shape.t), u_all(shape.r);
  std::iota(v_all.begin(), v_all.end(), 1);
  std::iota(u_all.begin(), u_all.end(), 1);

  // Subsets as sorted index combinations.
  auto for_each_subset = [](int n, int l, auto&& fn) {
    std::vector<int> idx(l);
    std::iota(idx.begin(), idx.end(), 1);
    while (true) {
      fn(idx);
      int p = l - 1;
      while (p >= 0 && idx[p] == n - l + p + 1) --p;
      if (p < 0) break;
      ++idx[p];
      for (int q = p + 1; q < l; ++q) idx[q] = idx[q - 1] + 1;
    }
  };

  for (Index l = 2; l <= l_max; ++l) {
    for_each_subset(static_cast<int>(shape.t), static_cast<int>(l), [&](const std::vector<int>& vs) {
      for_each_subset(static_cast<int>(shape.r), static_cast<int>(l), [&](const std::vector<int>& us) {
        // Fix the smallest V-vertex first: each directed cycle (= signed
        // circuit) is generated exactly once, already normalized.
        std::vector<int> v_rest(vs.begin() + 1, vs.end());
        std::sort(v_rest.begin(), v_rest.end());
        do {
          std::vector<int> u_order(us);
          std::sort(u_order.begin(), u_order.end());
          do {
            std::vector<std::pair<int, int>> pairs;
            pairs.reserve(l);
            pairs.emplace_back(vs[0], u_order[0]);
            for (Index a = 1; a < l; ++a)
              pairs.emplace_back(v_rest[a - 1], u_order[a]);
            walks.push_back(CircuitWalk{shape, std::move(pairs)});
          } while (std::next_permutation(u_order.begin(), u_order.end()));
        } while (std::next_permutation(v_rest.begin(), v_rest.end()));
      });
    });
  }

  std::sort(walks.begin(), walks.end(),
            [](const CircuitWalk& a, const CircuitWalk& b) { return a.pairs < b.pairs; });

  std::vector<CircuitMatrix> circuits;
  circuits.reserve(walks.size());
  for (const CircuitWalk& w : walks) circuits.push_back(walk_to_matrix(w));
  return circuits;
}

CircuitMatrix apply_vertex_permutation(const CircuitMatrix& circuit,
                                       const std::vector<int>& sigma_v,
                                       const std::vector<int>& sigma_u) {
  const auto& shape = circuit.shape;
  auto check_permutation = [](const std::vector<int>& sigma, Index n,
                              const char* name) {
    if (static_cast<Index>(sigma.size()) != n)
      throw std::invalid_argument(std::string(name) + ": wrong size");
    std::vector<bool> hit(n, false);
    for (int image : sigma) {
      if (image < 1 || image > n || hit[image - 1])
        throw std::invalid_argument(std::string(name) + ": not a permutation");
      hit[image - 1] = true;
    }
  };
  check_permutation(sigma_v, shape.t, "sigma_v");
  check_permutation(sigma_u, shape.r, "sigma_u");

  IntMatrix e(shape.t, shape.r);
  for (Index i = 0; i < shape.t; ++i)
    for (Index j = 0; j < shape.r; ++j)
      e(sigma_v[i] - 1, sigma_u[j] - 1) = circuit.entries(i, j);
  return CircuitMatrix{shape, std::move(e)};
}

}  // namespace graver
