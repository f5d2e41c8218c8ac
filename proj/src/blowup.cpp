#include "nashtoric/blowup.hpp"

#include <algorithm>

namespace nashtoric {

namespace {

void validate_base(const Mat& gens, const std::vector<Index>& base) {
  if (static_cast<Index>(base.size()) != gens.rows())
    throw DimensionError("base subset must have exactly rank-many indices");
  std::vector<Index> sorted = base;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 0 || sorted[i] >= gens.cols())
      throw IndexError("base index " + std::to_string(sorted[i]) +
                       " out of range");
    if (i > 0 && sorted[i] == sorted[i - 1])
      throw IndexError("base index " + std::to_string(sorted[i]) +
                       " repeated");
  }
}

}  // namespace

std::vector<std::vector<Index>> enumerate_bases(const Mat& gens, Index rank) {
  if (rank != gens.rows())
    throw DimensionError("enumerate_bases: rank does not match generators");
  std::vector<std::vector<Index>> bases;
  for (const std::vector<Index>& subset : index_subsets(gens.cols(), rank))
    if (det(select_columns(gens, subset)) != 0) bases.push_back(subset);
  return bases;
}

Int replacement_determinant(const Mat& gens, const std::vector<Index>& base,
                            std::size_t slot, Index g) {
  validate_base(gens, base);
  if (slot >= base.size())
    throw IndexError("replacement slot out of range");
  if (g < 0 || g >= gens.cols())
    throw IndexError("replacement column out of range");
  Mat m(gens.rows(), static_cast<Index>(base.size()));
  m.col(0) = gens.col(g);
  Index c = 1;
  for (std::size_t i = 0; i < base.size(); ++i)
    if (i != slot) m.col(c++) = gens.col(base[i]);
  return det(m);
}

Mat chart_generators(const Mat& gens, const std::vector<Index>& base) {
  validate_base(gens, base);
  if (det(select_columns(gens, base)) == 0)
    throw SingularMatrixError("chart_generators: base determinant is zero");

  std::vector<Index> outside;
  for (Index j = 0; j < gens.cols(); ++j)
    if (std::find(base.begin(), base.end(), j) == base.end())
      outside.push_back(j);

  std::vector<Vec> out;
  VecSet seen;
  auto push = [&](Vec v) {
    if (seen.insert(v).second) out.push_back(std::move(v));
  };
  for (Index h : base) push(gens.col(h));
  for (std::size_t slot = 0; slot < base.size(); ++slot) {
    for (Index g : outside) {
      if (replacement_determinant(gens, base, slot, g) == 0) continue;
      push(gens.col(g) - gens.col(base[slot]));
    }
  }
  return from_columns(gens.rows(), out);
}

namespace {

Chart make_chart(const Mat& gens, const std::vector<Index>& base,
                 int sieve_depth, const SearchLimits& limits) {
  Chart chart;
  chart.parent_generators = gens;
  chart.base = base;
  chart.base_det = det(select_columns(gens, base));
  chart.generators = chart_generators(gens, base);
  const Mat stripped = strip_zero_and_duplicate_columns(chart.generators);
  std::optional<Covec> cert = pointedness_certificate(stripped);
  if (cert)
    chart.semigroup = detail::hilbert_basis_with_certificate(
        stripped, sieve_depth, *cert, limits);
  return chart;
}

}  // namespace

Chart chart_with_explicit_generators(const Mat& gens,
                                     const std::vector<Index>& base,
                                     int sieve_depth,
                                     const SearchLimits& limits) {
  return make_chart(gens, base, sieve_depth, limits);
}

std::vector<Chart> nash_blowup(const AffineSemigroup& s, int sieve_depth,
                               const SearchLimits& limits) {
  std::vector<Chart> charts;
  for (const std::vector<Index>& base : enumerate_bases(s.basis(), s.rank()))
    charts.push_back(make_chart(s.basis(), base, sieve_depth, limits));
  return charts;
}

}  // namespace nashtoric
