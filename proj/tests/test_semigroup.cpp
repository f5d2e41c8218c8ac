#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nashtoric/blowup.hpp"
#include "nashtoric/counterexample.hpp"
#include "nashtoric/semigroup.hpp"
#include "test_support.hpp"

using namespace nashtoric;
using namespace testsupport;

TEST_CASE("pointedness certificates") {
  const CounterexampleData data = counterexample_data();

  const std::optional<Covec> root =
      pointedness_certificate(data.root_generators);
  REQUIRE(root);
  for (Index j = 0; j < data.root_generators.cols(); ++j) {
    CHECK(root->dot(data.root_generators.col(j)) >= 1);
    // The recorded functional must itself validate.
    CHECK(data.root_certificate.dot(data.root_generators.col(j)) >= 1);
  }

  const std::optional<Covec> chart =
      pointedness_certificate(data.first_chart_generating_set);
  REQUIRE(chart);
  for (Index j = 0; j < data.first_chart_generating_set.cols(); ++j)
    CHECK(data.first_chart_certificate.dot(
              data.first_chart_generating_set.col(j)) >= 1);

  CHECK_FALSE(pointedness_certificate(make_mat(2, 2, {1, -1, 0, 0})));
  CHECK_FALSE(pointedness_certificate(make_mat(2, 3, {1, -1, 0, 0, 0, 1})));

  CHECK_THROWS_AS(pointedness_certificate(make_mat(2, 2, {1, 0, 0, 0})),
                  DegenerateInputError);
  CHECK_THROWS_AS(pointedness_certificate(Mat(3, 0)), DegenerateInputError);
}

TEST_CASE("membership decisions around the non-saturation witness") {
  const CounterexampleData data = counterexample_data();
  const Mat& b = data.root_generators;
  const Covec& cert = data.root_certificate;

  const Vec u = data.nonsaturation_point;
  CHECK_FALSE(is_member(u, b, cert));

  const std::optional<Representation> triple = is_member(Vec(3 * u), b, cert);
  REQUIRE(triple);
  CHECK(equal(triple->evaluate(b), Vec(3 * u)));

  const std::optional<Representation> zero =
      is_member(Vec(Vec::Zero(3)), b, cert);
  REQUIRE(zero);
  CHECK(zero->terms.empty());

  Covec bad(3);
  bad << 1, 1, 1;  // value 0 on the fourth generator
  CHECK_THROWS_AS(is_member(u, b, bad), InvalidCertificateError);
  CHECK_THROWS_AS(is_member(make_vec({1, 0}), b, cert), DimensionError);
}

TEST_CASE("membership representations always re-evaluate to the target") {
  std::mt19937_64 rng(555);
  int done = 0;
  while (done < 40) {
    const Index d = 2 + static_cast<Index>(rng() % 2);
    const std::optional<Mat> gens = sample_pointed(rng, d);
    if (!gens) continue;
    ++done;
    const Covec cert = *pointedness_certificate(*gens);
    // Random nonnegative combinations must come back as members.
    std::uniform_int_distribution<int> mult(0, 3);
    Vec target = Vec::Zero(d);
    for (Index j = 0; j < gens->cols(); ++j) target += mult(rng) * gens->col(j);
    const std::optional<Representation> rep = is_member(target, *gens, cert);
    REQUIRE(rep);
    CHECK(equal(rep->evaluate(*gens), target));
  }
}

TEST_CASE("membership is closed under addition") {
  const CounterexampleData data = counterexample_data();
  const Mat& b = data.root_generators;
  const Covec& cert = data.root_certificate;
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> mult(0, 2);
  for (int trial = 0; trial < 25; ++trial) {
    Vec x = Vec::Zero(3), y = Vec::Zero(3);
    for (Index j = 0; j < b.cols(); ++j) {
      x += mult(rng) * b.col(j);
      y += mult(rng) * b.col(j);
    }
    REQUIRE(is_member(x, b, cert));
    REQUIRE(is_member(y, b, cert));
    CHECK(is_member(Vec(x + y), b, cert));
  }
}

TEST_CASE("sieve removes visible sums and nothing irreducible") {
  // e1 + e2 is a visible 2-sum.
  const Mat trio = make_mat(2, 3, {1, 0, 1, 0, 1, 1});
  const Mat sieved = sieve(trio, 2);
  REQUIRE(sieved.cols() == 2);
  CHECK(equal(sieved, make_mat(2, 2, {1, 0, 0, 1})));

  const CounterexampleData data = counterexample_data();
  // The root generators are already a Hilbert basis; nothing to remove.
  CHECK(equal(sieve(data.root_generators, 6), data.root_generators));

  // On the first chart generator set the sieve knocks out at least the
  // recorded 2-sum (a doubled difference) while preserving the semigroup.
  const Mat ga = chart_generators(data.root_generators, data.first_chart_base);
  const Mat sieved_ga = sieve(ga, 6);
  CHECK(sieved_ga.cols() < ga.cols());
  const Vec doubled =
      data.root_generators.col(2) - data.root_generators.col(5);
  bool still_there = false;
  for (Index j = 0; j < sieved_ga.cols(); ++j)
    if (equal(sieved_ga.col(j), doubled)) still_there = true;
  CHECK_FALSE(still_there);
  CHECK(semigroup_equals(sieved_ga, ga));
}

TEST_CASE("hilbert basis of the counterexample data") {
  const CounterexampleData data = counterexample_data();
  const AffineSemigroup s = hilbert_basis(data.root_generators);
  CHECK(s.size() == 6);
  CHECK(equal(s.basis(), sorted_columns(data.root_generators)));

  const Mat ga = chart_generators(data.root_generators, data.first_chart_base);
  const AffineSemigroup sa = hilbert_basis(ga);
  CHECK(semigroup_equals(sa.basis(), data.first_chart_generating_set));

  const Mat id3 = Mat::Identity(3, 3);
  CHECK(equal(hilbert_basis(id3).basis(), sorted_columns(id3)));

  CHECK_THROWS_AS(hilbert_basis(make_mat(2, 2, {1, -1, 0, 0})),
                  NotPointedError);
  CHECK_THROWS_AS(hilbert_basis(make_mat(2, 2, {2, 0, 0, 1})),
                  LatticeSpanError);
  CHECK_THROWS_AS(hilbert_basis(Mat(Mat::Zero(2, 1))), DegenerateInputError);
}

TEST_CASE("hilbert basis invariants") {
  const CounterexampleData data = counterexample_data();
  const Mat ga = chart_generators(data.root_generators, data.first_chart_base);
  const AffineSemigroup s = hilbert_basis(ga);

  for (Index i = 0; i < s.size(); ++i) {
    CHECK(s.certificate().dot(s.element(i)) >= 1);
    // Minimality: no basis element is generated by the others.
    std::vector<Index> others;
    for (Index j = 0; j < s.size(); ++j)
      if (j != i) others.push_back(j);
    CHECK_FALSE(is_member(s.element(i), select_columns(s.basis(), others),
                          s.certificate()));
  }

  // Idempotence: reducing the basis again changes nothing.
  CHECK(equal(hilbert_basis(s.basis()).basis(), s.basis()));
}

TEST_CASE("hilbert basis agrees with the bounded-enumeration oracle") {
  std::mt19937_64 rng(20260810);
  int done = 0;
  while (done < 60) {
    const Index d = 2 + static_cast<Index>(rng() % 2);
    const std::optional<Mat> gens = sample_pointed(rng, d);
    if (!gens) continue;
    const Covec cert = *pointedness_certificate(*gens);
    const auto oracle = oracle_hilbert_basis(*gens, cert);
    if (!oracle) continue;
    ++done;
    const AffineSemigroup s = hilbert_basis(*gens);
    const Mat expected = from_columns(d, *oracle);
    CHECK(equal(s.basis(), expected));
    // Sieve-then-reduce equals reduce-without-sieve.
    CHECK(equal(hilbert_basis(*gens, 1).basis(), s.basis()));
    CHECK(equal(hilbert_basis(*gens, 3).basis(), s.basis()));
  }
}

TEST_CASE("semigroup equality") {
  const CounterexampleData data = counterexample_data();
  const Mat ga1 = chart_generators(data.root_generators, data.first_chart_base);
  CHECK(semigroup_equals(ga1, data.first_chart_generating_set));
  const Mat ga2 = chart_generators(data.first_chart_generating_set,
                                   data.second_chart_base);
  CHECK(semigroup_equals(ga2, data.second_chart_generating_set));
  CHECK_FALSE(semigroup_equals(make_mat(1, 1, {1}), make_mat(1, 1, {2})));
  CHECK_THROWS_AS(
      semigroup_equals(make_mat(2, 2, {1, -1, 0, 0}), make_mat(2, 1, {1, 0})),
      NotPointedError);
}

TEST_CASE("smoothness") {
  CHECK(is_smooth(hilbert_basis(Mat(Mat::Identity(3, 3)))));
  CHECK(is_smooth(hilbert_basis(make_mat(2, 2, {1, 1, 0, 1}))));
  const CounterexampleData data = counterexample_data();
  CHECK_FALSE(is_smooth(hilbert_basis(data.root_generators)));
}

TEST_CASE("saturation witness") {
  const CounterexampleData data = counterexample_data();
  const AffineSemigroup s = hilbert_basis(data.root_generators);
  const std::optional<Vec> w = saturation_witness(s, 1);
  REQUIRE(w);
  // Any returned point must be a genuine witness, whatever point it is.
  CHECK_FALSE(is_member(*w, s.basis(), s.certificate()));
  bool multiple_inside = false;
  for (Int lambda(2); lambda <= 12; ++lambda)
    if (is_member(Vec(lambda * *w), s.basis(), s.certificate()))
      multiple_inside = true;
  CHECK(multiple_inside);

  const AffineSemigroup free3 = hilbert_basis(Mat(Mat::Identity(3, 3)));
  CHECK_FALSE(saturation_witness(free3, 3));

  // {(2,0),(1,1),(0,2)} spans only the even sublattice and is rejected raw;
  // re-indexed onto the full lattice it is saturated, so no witness.
  CHECK_THROWS_AS(hilbert_basis(make_mat(2, 3, {2, 1, 0, 0, 1, 2})),
                  LatticeSpanError);
  const AffineSemigroup reindexed =
      hilbert_basis(make_mat(2, 3, {2, 1, 0, -1, 0, 1}));
  CHECK_FALSE(saturation_witness(reindexed, 3));
}

TEST_CASE("binomial relations") {
  const CounterexampleData data = counterexample_data();
  const Mat& b = data.root_generators;
  for (const BinomialRelation& rel : data.defining_binomials)
    CHECK(relation_holds(rel, b));
  CHECK_FALSE(relation_holds(BinomialRelation{{0}, {1}}, b));
  CHECK_THROWS_AS(relation_holds(BinomialRelation{{9}, {0}}, b), IndexError);
}

TEST_CASE("search limits abort long computations") {
  SearchLimits limits;
  limits.deadline =
      std::chrono::steady_clock::now() - std::chrono::milliseconds(1);
  const CounterexampleData data = counterexample_data();
  CHECK_THROWS_AS(
      hilbert_basis(data.root_generators, kDefaultSieveDepth, limits),
      TimeoutError);
}
