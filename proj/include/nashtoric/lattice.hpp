#pragma once

#include <optional>

#include "nashtoric/numeric.hpp"

namespace nashtoric {

// Exact determinant by fraction-free (Bareiss) elimination. Accepts any
// integer matrix expression; throws DimensionError on non-square input.
template <typename Derived>
Int det(const Eigen::MatrixBase<Derived>& expr) {
  if (expr.rows() != expr.cols())
    throw DimensionError("det: matrix is " + std::to_string(expr.rows()) +
                         "x" + std::to_string(expr.cols()) + ", not square");
  const Index n = expr.rows();
  if (n == 0) return Int(1);
  Mat a = expr;
  Int sign(1);
  Int prev(1);
  for (Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Index pivot = -1;
      for (Index r = k + 1; r < n; ++r)
        if (a(r, k) != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) return Int(0);
      a.row(k).swap(a.row(pivot));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        Int num = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        a(i, j) = exact_div(num, prev);
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

template <typename Derived>
bool is_unimodular(const Eigen::MatrixBase<Derived>& m) {
  const Int d = det(m);
  return d == 1 || d == -1;
}

// True iff the integer span of the columns equals Z^d, decided by a
// Hermite-style column reduction (all elementary divisors must be 1).
// Throws DegenerateInputError on an empty generator list.
bool spans_full_lattice(const Mat& gens);

// Hermite column echelon form via unimodular column operations; pivots are
// made positive. Exposed mainly for the span test and for tests.
Mat hermite_column_form(Mat m);

// Solves basis * x = target exactly over the rationals and returns x when it
// is integral, std::nullopt otherwise. Throws SingularMatrixError when the
// basis columns are dependent.
std::optional<Vec> solve_integer_columns(const Mat& basis, const Vec& target);

}  // namespace nashtoric
