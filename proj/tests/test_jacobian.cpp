#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nashtoric/blowup.hpp"
#include "nashtoric/counterexample.hpp"
#include "nashtoric/jacobian.hpp"
#include "nashtoric/lattice.hpp"
#include "test_support.hpp"

using namespace nashtoric;
using namespace testsupport;

TEST_CASE("closed-form minors on the counterexample data") {
  const CounterexampleData data = counterexample_data();
  const Mat& b = data.root_generators;

  const MonomialMinor base = jacobian_minor(b, {0, 3, 5});
  CHECK(base.coefficient == 3);
  CHECK(equal(base.exponent, make_vec({0, -4, 2})));

  CHECK(jacobian_minor(b, {1, 3, 5}).coefficient == 6);

  // Dependent columns give a vanishing minor.
  CHECK(jacobian_minor(b, {2, 4, 5}).coefficient == 0);

  CHECK_THROWS_AS(jacobian_minor(b, {0, 0, 1}), IndexError);
  CHECK_THROWS_AS(jacobian_minor(b, {0, 1, 7}), IndexError);
}

TEST_CASE("closed form matches symbolic differentiation") {
  std::mt19937_64 rng(987);
  for (int trial = 0; trial < 60; ++trial) {
    const Index d = 2 + static_cast<Index>(rng() % 2);
    const Index r = d + 1 + static_cast<Index>(rng() % 3);
    const Mat gens = random_matrix(rng, d, r, -3, 3);
    const auto tuples = index_subsets(r, d);
    const auto& rows = tuples[rng() % tuples.size()];

    // Symbolic route: d x d matrix of derivatives of the monomial map,
    // expanded over exact Laurent polynomials.
    std::vector<std::vector<LaurentPoly>> m;
    for (Index i : rows) {
      const LaurentPoly coord = LaurentPoly::monomial(1, gens.col(i));
      std::vector<LaurentPoly> row;
      for (Index k = 0; k < d; ++k) row.push_back(laurent_derivative(coord, k));
      m.push_back(std::move(row));
    }
    const LaurentPoly symbolic = laurent_det(m);

    const MonomialMinor minor = jacobian_minor(gens, rows);
    const LaurentPoly closed =
        LaurentPoly::monomial(minor.coefficient, minor.exponent);
    CHECK(symbolic == closed);
  }
}

TEST_CASE("minor charts reproduce the recorded generating sets") {
  const CounterexampleData data = counterexample_data();
  CHECK(index_subsets(6, 3).size() == 20);
  CHECK(index_subsets(8, 3).size() == 56);

  const Mat first =
      chart_via_minors(data.root_generators, data.first_chart_base);
  CHECK(semigroup_equals(first, data.first_chart_generating_set));

  const Mat second = chart_via_minors(data.first_chart_generating_set,
                                      data.second_chart_base);
  CHECK(semigroup_equals(second, data.second_chart_generating_set));

  CHECK_THROWS_AS(chart_via_minors(data.root_generators, {2, 4, 5}),
                  SingularMatrixError);
}

TEST_CASE("minor chart of the free semigroup") {
  const Mat id3 = Mat::Identity(3, 3);
  const Mat chart = chart_via_minors(id3, {0, 1, 2});
  // Only one nonsingular triple exists; the chart is the free semigroup.
  CHECK(semigroup_equals(chart, id3));
}

TEST_CASE("minor and difference constructions agree") {
  const CounterexampleData data = counterexample_data();
  CHECK(cross_check(data.root_generators, data.first_chart_base));
  CHECK(cross_check(data.first_chart_generating_set, data.second_chart_base));

  const AffineSemigroup free3 = hilbert_basis(Mat(Mat::Identity(3, 3)));
  CHECK(cross_check(free3, {0, 1, 2}));
}

TEST_CASE("agreement across every pointed chart of the regression corpus") {
  const CounterexampleData data = counterexample_data();
  const std::vector<Mat> corpus = {data.root_generators,
                                   data.first_chart_generating_set,
                                   data.discovery_seed};
  for (const Mat& gens : corpus) {
    const AffineSemigroup s = hilbert_basis(gens);
    for (const Chart& chart : nash_blowup(s)) {
      if (!chart.semigroup) continue;
      CHECK(cross_check(s, chart.base));
    }
  }
}
