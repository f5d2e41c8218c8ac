#include "nashtoric/lattice.hpp"

namespace nashtoric {

Mat hermite_column_form(Mat m) {
  const Index rows = m.rows();
  const Index cols = m.cols();
  Index pivot_col = 0;
  for (Index r = 0; r < rows && pivot_col < cols; ++r) {
    // Bring a nonzero entry into (r, pivot_col) if this row has one.
    Index j = pivot_col;
    while (j < cols && m(r, j) == 0) ++j;
    if (j == cols) continue;
    if (j != pivot_col) m.col(j).swap(m.col(pivot_col));
    // Fold every later column into the pivot with extended-gcd column
    // operations (unimodular, so the column lattice is preserved).
    for (Index k = pivot_col + 1; k < cols; ++k) {
      if (m(r, k) == 0) continue;
      Int s, t;
      const Int g = ext_gcd(m(r, pivot_col), m(r, k), s, t);
      const Int u = exact_div(m(r, pivot_col), g);
      const Int v = exact_div(m(r, k), g);
      Vec cp = m.col(pivot_col);
      Vec ck = m.col(k);
      m.col(pivot_col) = s * cp + t * ck;
      m.col(k) = u * ck - v * cp;
    }
    if (sgn(m(r, pivot_col)) < 0) m.col(pivot_col) = -m.col(pivot_col);
    ++pivot_col;
  }
  return m;
}

bool spans_full_lattice(const Mat& gens) {
  if (gens.cols() == 0)
    throw DegenerateInputError("spans_full_lattice: empty generator list");
  const Index d = gens.rows();
  if (gens.cols() < d) return false;
  const Mat h = hermite_column_form(gens);
  // After reduction the column lattice is spanned by a staircase; it equals
  // Z^d exactly when every row holds a pivot equal to 1.
  Index pivot_col = 0;
  for (Index r = 0; r < d; ++r) {
    if (pivot_col >= h.cols() || h(r, pivot_col) != 1) return false;
    ++pivot_col;
  }
  return true;
}

std::optional<Vec> solve_integer_columns(const Mat& basis, const Vec& target) {
  if (basis.rows() != basis.cols())
    throw DimensionError("solve_integer_columns: basis must be square");
  if (target.size() != basis.rows())
    throw DimensionError("solve_integer_columns: target dimension mismatch");
  const Int d0 = det(basis);
  if (d0 == 0)
    throw SingularMatrixError("solve_integer_columns: singular basis");
  const Index n = basis.cols();
  Vec x(n);
  // Cramer with exact determinants; the solution is integral iff every
  // cofactor determinant is divisible by det(basis).
  for (Index i = 0; i < n; ++i) {
    Mat replaced = basis;
    replaced.col(i) = target;
    const Int di = det(replaced);
    if (!divides(d0, di)) return std::nullopt;
    x(i) = exact_div(di, d0);
  }
  return x;
}

}  // namespace nashtoric
