#pragma once

#include <gmpxx.h>

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <vector>

// Eigen needs NumTraits for the GMP scalar before any matrix type is formed.
namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpz_class;
  using Nested = mpz_class;
  using Literal = long;

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50,
  };
};

}  // namespace Eigen

namespace graver {

// Exact arithmetic everywhere: completion intermediates and certificate
// coefficients outgrow machine words even when the inputs are 0/±1.
using Int = mpz_class;
using Rat = mpq_class;

using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

// Thrown by text/JSON readers; the message carries position information.
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when a computation exceeds its configured caps. A partial Graver
// basis is meaningless, so we never return one.
class resource_limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline bool is_zero(const IntVector& v) {
  return (v.array() == Int(0)).all();
}

// Strict lexicographic order on equal-length vectors, entrywise by value.
inline bool lex_less(const IntVector& a, const IntVector& b) {
  for (Index i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

inline Int one_norm(const IntVector& v) {
  Int s = 0;
  for (Index i = 0; i < v.size(); ++i) s += abs(v[i]);
  return s;
}

inline Int inf_norm(const IntVector& v) {
  Int m = 0;
  for (Index i = 0; i < v.size(); ++i)
    if (abs(v[i]) > m) m = abs(v[i]);
  return m;
}

std::string to_string(const IntVector& v);
std::string to_string(const IntMatrix& m);

}  // namespace graver
