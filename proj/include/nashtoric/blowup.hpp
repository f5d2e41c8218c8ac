#pragma once

#include <optional>
#include <vector>

#include "nashtoric/semigroup.hpp"

namespace nashtoric {

// One affine chart of the Nash blowup: a nonsingular column subset A of the
// parent's generating set, the derived generator set, and the resulting
// semigroup (absent when the chart is rejected as non-pointed).
struct Chart {
  Mat parent_generators;
  std::vector<Index> base;
  Int base_det;
  Mat generators;
  std::optional<AffineSemigroup> semigroup;
};

// All size-d index subsets of the generator columns with nonzero determinant,
// in lexicographic order of the index tuples.
std::vector<std::vector<Index>> enumerate_bases(const Mat& gens, Index rank);

// The determinant deciding whether g - base[slot] joins the chart generator
// set: the replacing column g first, then the remaining base columns in
// order.
Int replacement_determinant(const Mat& gens, const std::vector<Index>& base,
                            std::size_t slot, Index g);

// The chart generating set for base subset A: the columns of A followed by
// every difference g - h (h in A, g outside A) for which swapping h's column
// with g keeps the base determinant nonzero. Deduplicated; order is A first,
// then (h, g) index order. Throws SingularMatrixError when A is singular.
Mat chart_generators(const Mat& gens, const std::vector<Index>& base);

// Builds the full chart for a caller-supplied generating set, used verbatim
// (no Hilbert-basis canonicalization of the input).
Chart chart_with_explicit_generators(const Mat& gens,
                                     const std::vector<Index>& base,
                                     int sieve_depth = kDefaultSieveDepth,
                                     const SearchLimits& limits = {});

// One chart per enumerated base of the Hilbert basis; pointed charts carry
// their semigroup, non-pointed ones are kept with an empty result so chart
// coverage stays auditable.
std::vector<Chart> nash_blowup(const AffineSemigroup& s,
                               int sieve_depth = kDefaultSieveDepth,
                               const SearchLimits& limits = {});

}  // namespace nashtoric
