#pragma once

#include <utility>
#include <vector>

#include "graver/numeric.hpp"

namespace graver {

// Vertex classes V = {v_1..v_t} and U = {u_1..u_r} of K_{t,r}.
struct BipartiteShape {
  Index t = 0;
  Index r = 0;

  BipartiteShape(Index t_, Index r_) : t(t_), r(r_) {
    if (t < 2 || r < 2)
      throw std::invalid_argument("BipartiteShape: need t >= 2 and r >= 2");
  }
  bool operator==(const BipartiteShape&) const = default;
};

// A circuit as the vertex sequence (v_{i1}, u_{j1}, ..., v_{il}, u_{jl}),
// stored as 1-based (V-index, U-index) pairs. The edge (v_{i1}, u_{j1})
// carries value +1.
struct CircuitWalk {
  BipartiteShape shape;
  std::vector<std::pair<int, int>> pairs;

  bool operator==(const CircuitWalk&) const = default;
};

// The same circuit as a t×r matrix over {-1, 0, +1} with zero row and
// column sums and single-cycle support.
struct CircuitMatrix {
  BipartiteShape shape;
  IntMatrix entries;

  bool operator==(const CircuitMatrix& other) const {
    return shape == other.shape && entries == other.entries;
  }
};

// Incidence matrix of K_{t,r}: (t+r) × (t·r), identical to the r-th
// Lawrence lifting of the all-ones row of length t. Column (i,j) sits at
// position (j-1)·t + i, so circuit matrices flatten column-major.
IntMatrix incidence_matrix(const BipartiteShape& shape);

// Conversions between the two circuit representations. matrix_to_walk
// normalizes: the walk starts at the smallest V-index in the support, +1
// edge first. Both throw std::invalid_argument on invalid input.
CircuitMatrix walk_to_matrix(const CircuitWalk& walk);
CircuitWalk matrix_to_walk(const CircuitMatrix& circuit);

// Rotate the walk so the smallest V-index comes first (same orientation).
CircuitWalk normalized(const CircuitWalk& walk);

// True iff x, viewed column-major as a t×r matrix, is a circuit of
// incidence_matrix(shape).
bool is_circuit(const IntVector& x, const BipartiteShape& shape);
bool is_circuit(const CircuitMatrix& circuit);

// Why the matrix fails the circuit invariants; nullopt when it is one.
std::optional<std::string> circuit_violation(const CircuitMatrix& circuit);

// Column-major flattening and its inverse (no validity check).
IntVector circuit_to_vector(const CircuitMatrix& circuit);
CircuitMatrix circuit_from_vector(const IntVector& x, const BipartiteShape& shape);

// All signed circuits of K_{t,r} (both orientations of every cycle), each
// exactly once, sorted by walk. Throws resource_limit_error when the count
// exceeds max_count.
std::vector<CircuitMatrix> enumerate_circuits(const BipartiteShape& shape,
                                              std::uint64_t max_count = 10'000'000);

// Entry (sigma_v(i), sigma_u(j)) of the result equals entry (i,j) of the
// input. Permutations are 1-based images: sigma[i-1] is the image of i.
CircuitMatrix apply_vertex_permutation(const CircuitMatrix& circuit,
                                       const std::vector<int>& sigma_v,
                                       const std::vector<int>& sigma_u);

}  // namespace graver
