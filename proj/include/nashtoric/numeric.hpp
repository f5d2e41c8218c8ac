#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <algorithm>
#include <chrono>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

// Eigen needs NumTraits for the GMP scalars. Both are exact, so the
// epsilon/precision hooks are zero.
namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpz_class NonInteger;
  typedef mpz_class Nested;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 20,
    MulCost = 40
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 80
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace nashtoric {

using Int = mpz_class;
using Rat = mpq_class;
using Index = Eigen::Index;

// Columns are generators throughout: a d x k Mat is a list of k lattice
// vectors in Z^d.
using Mat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
// Covectors (linear functionals on the lattice) are row vectors.
using Covec = Eigen::Matrix<Int, 1, Eigen::Dynamic>;

// ---------------------------------------------------------------------------
// Errors

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
  using Error::Error;
};
struct DegenerateInputError : Error {
  using Error::Error;
};
struct SingularMatrixError : Error {
  using Error::Error;
};
struct InvalidCertificateError : Error {
  using Error::Error;
};
struct NotPointedError : Error {
  using Error::Error;
};
struct LatticeSpanError : Error {
  using Error::Error;
};
struct IndexError : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
// Raised when a configured compute deadline expires; callers that set a
// deadline are expected to catch it and record the truncation.
struct TimeoutError : Error {
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Exact comparisons and orderings

template <typename A, typename B>
bool equal(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

inline bool is_zero(const Vec& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) return false;
  return true;
}

inline int lex_compare(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (Index i = 0; i < a.size(); ++i) {
    const int c = cmp(a(i), b(i));
    if (c != 0) return c;
  }
  return 0;
}

struct LexLess {
  bool operator()(const Vec& a, const Vec& b) const {
    return lex_compare(a, b) < 0;
  }
};

using VecSet = std::set<Vec, LexLess>;

// ---------------------------------------------------------------------------
// Column utilities

inline std::vector<Vec> columns_of(const Mat& m) {
  std::vector<Vec> cols;
  cols.reserve(static_cast<std::size_t>(m.cols()));
  for (Index j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
  return cols;
}

inline Mat from_columns(Index rank, const std::vector<Vec>& cols) {
  Mat m(rank, static_cast<Index>(cols.size()));
  for (Index j = 0; j < m.cols(); ++j) {
    const Vec& c = cols[static_cast<std::size_t>(j)];
    if (c.size() != rank)
      throw DimensionError("from_columns: column dimension mismatch");
    m.col(j) = c;
  }
  return m;
}

inline Mat select_columns(const Mat& m, const std::vector<Index>& idx) {
  Mat out(m.rows(), static_cast<Index>(idx.size()));
  for (std::size_t j = 0; j < idx.size(); ++j) {
    if (idx[j] < 0 || idx[j] >= m.cols())
      throw IndexError("column index " + std::to_string(idx[j]) +
                       " out of range");
    out.col(static_cast<Index>(j)) = m.col(idx[j]);
  }
  return out;
}

// Drops zero columns and duplicate values, keeping first occurrences in
// input order.
inline Mat strip_zero_and_duplicate_columns(const Mat& m) {
  std::vector<Vec> keep;
  VecSet seen;
  for (Index j = 0; j < m.cols(); ++j) {
    Vec c = m.col(j);
    if (is_zero(c)) continue;
    if (seen.insert(c).second) keep.push_back(std::move(c));
  }
  return from_columns(m.rows(), keep);
}

inline Mat sorted_columns(const Mat& m) {
  std::vector<Vec> cols = columns_of(m);
  std::sort(cols.begin(), cols.end(), LexLess{});
  return from_columns(m.rows(), cols);
}

// All size-k index subsets of {0, ..., n-1} in lexicographic order.
inline std::vector<std::vector<Index>> index_subsets(Index n, Index k) {
  std::vector<std::vector<Index>> out;
  if (k < 0 || k > n) return out;
  std::vector<Index> cur(static_cast<std::size_t>(k));
  for (Index i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(cur);
    Index i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (Index j = i + 1; j < k; ++j)
      cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Integer helpers

inline Int gcd_int(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm_int(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// g = gcd(a, b) = s*a + t*b
inline Int ext_gcd(const Int& a, const Int& b, Int& s, Int& t) {
  Int g;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return g;
}

inline bool divides(const Int& d, const Int& n) {
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Exact quotient; only valid when divides(d, n).
inline Int exact_div(const Int& n, const Int& d) {
  Int q;
  mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

inline Int floor_div(const Int& n, const Int& d) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

// ---------------------------------------------------------------------------
// Compute limits (cooperative deadlines for long searches)

struct SearchLimits {
  std::optional<std::chrono::steady_clock::time_point> deadline;

  void check() const {
    if (deadline && std::chrono::steady_clock::now() > *deadline)
      throw TimeoutError("compute deadline exceeded");
  }
};

}  // namespace nashtoric
