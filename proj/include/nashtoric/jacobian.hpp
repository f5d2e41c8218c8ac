#pragma once

#include <vector>

#include "nashtoric/semigroup.hpp"

namespace nashtoric {

// A maximal minor of the Jacobian of the monomial parametrization
// x -> (x^{g_1}, ..., x^{g_r}). Every such minor is a single monomial:
// coefficient det(g_{i_1} ... g_{i_d}) and exponent (sum of the chosen
// generators) - (1, ..., 1).
struct MonomialMinor {
  std::vector<Index> rows;
  Int coefficient;
  Vec exponent;
};

// The minor selected by `rows` (all d columns), in closed form. Throws
// IndexError on repeated or out-of-range indices.
MonomialMinor jacobian_minor(const Mat& gens, const std::vector<Index>& rows);

// Generators of the blowup chart seen through the Pluecker coordinates:
// the ambient coordinate exponents followed by exponent(t) - exponent(base)
// for every row tuple t with nonzero coefficient. Deduplicated; zero
// differences dropped. Throws SingularMatrixError when the base minor
// vanishes.
Mat chart_via_minors(const Mat& gens, const std::vector<Index>& base_rows);

// The minor construction and the difference construction must describe the
// same chart semigroup.
bool cross_check(const Mat& gens, const std::vector<Index>& base,
                 const SearchLimits& limits = {});
bool cross_check(const AffineSemigroup& s, const std::vector<Index>& base,
                 const SearchLimits& limits = {});

}  // namespace nashtoric
