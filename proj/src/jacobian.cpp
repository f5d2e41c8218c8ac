#include "nashtoric/jacobian.hpp"

#include <algorithm>

#include "nashtoric/blowup.hpp"

namespace nashtoric {

MonomialMinor jacobian_minor(const Mat& gens, const std::vector<Index>& rows) {
  if (static_cast<Index>(rows.size()) != gens.rows())
    throw DimensionError("jacobian_minor: need exactly rank-many rows");
  std::vector<Index> sorted = rows;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 0 || sorted[i] >= gens.cols())
      throw IndexError("minor row " + std::to_string(sorted[i]) +
                       " out of range");
    if (i > 0 && sorted[i] == sorted[i - 1])
      throw IndexError("minor row " + std::to_string(sorted[i]) + " repeated");
  }
  MonomialMinor minor;
  minor.rows = rows;
  minor.coefficient = det(select_columns(gens, rows));
  Vec sum = Vec::Zero(gens.rows());
  for (Index i : rows) sum += gens.col(i);
  minor.exponent = sum - Vec::Ones(gens.rows());
  return minor;
}

Mat chart_via_minors(const Mat& gens, const std::vector<Index>& base_rows) {
  const MonomialMinor base = jacobian_minor(gens, base_rows);
  if (base.coefficient == 0)
    throw SingularMatrixError("chart_via_minors: base minor vanishes");
  std::vector<Vec> out;
  VecSet seen;
  auto push = [&](Vec v) {
    if (is_zero(v)) return;
    if (seen.insert(v).second) out.push_back(std::move(v));
  };
  // The chart lives over the source variety, so its coordinate exponents come
  // first, then the minor quotients.
  for (Index j = 0; j < gens.cols(); ++j) push(gens.col(j));
  for (const std::vector<Index>& rows :
       index_subsets(gens.cols(), gens.rows())) {
    if (rows == base_rows) continue;
    const MonomialMinor minor = jacobian_minor(gens, rows);
    if (minor.coefficient == 0) continue;
    push(minor.exponent - base.exponent);
  }
  return from_columns(gens.rows(), out);
}

bool cross_check(const Mat& gens, const std::vector<Index>& base,
                 const SearchLimits& limits) {
  return semigroup_equals(chart_via_minors(gens, base),
                          chart_generators(gens, base), limits);
}

bool cross_check(const AffineSemigroup& s, const std::vector<Index>& base,
                 const SearchLimits& limits) {
  return cross_check(s.basis(), base, limits);
}

}  // namespace nashtoric
