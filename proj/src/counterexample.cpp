#include "nashtoric/counterexample.hpp"

#include <functional>

#include "nashtoric/blowup.hpp"
#include "nashtoric/isomorphism.hpp"
#include "nashtoric/jacobian.hpp"
#include "nashtoric/lattice.hpp"

namespace nashtoric {

namespace {

Mat make_mat(Index rows, Index cols, std::initializer_list<int> entries) {
  Mat m(rows, cols);
  auto it = entries.begin();
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = *it++;
  return m;
}

}  // namespace

CounterexampleData counterexample_data() {
  CounterexampleData data;
  data.root_generators = make_mat(3, 6,
                                  {1, 0, 0, -2, 1, 2,    //
                                   0, 1, 0, -1, -1, -2,  //
                                   0, 0, 1, 2, 1, 1});
  data.root_certificate = Covec(3);
  data.root_certificate << 1, 2, 3;
  data.nonsaturation_point = Vec(3);
  data.nonsaturation_point << 0, -1, 1;
  data.first_chart_base = {0, 3, 5};
  data.first_base_det = 3;
  data.replacement_determinants = {Int(6),  Int(6),  Int(3),   //
                                   Int(-1), Int(-2), Int(-1),  //
                                   Int(-2), Int(-1), Int(1)};
  data.first_chart_generating_set = make_mat(3, 8,
                                             {-1, 0, 3, 1, -2, -2, 2, 2,   //
                                              1, -1, 0, 0, 3, -1, 2, -2,   //
                                              0, 1, -1, 0, -1, 2, -2, 1});
  data.first_chart_certificate = Covec(3);
  data.first_chart_certificate << 5, 8, 10;
  data.second_chart_base = {0, 4, 6};
  data.second_base_det = -2;
  data.second_chart_generating_set = make_mat(3, 6,
                                              {1, 4, 2, -2, -1, -4,    //
                                               -2, -1, -1, 3, -2, -3,  //
                                               1, -1, 0, -1, 2, 4});
  data.lattice_automorphism = make_mat(3, 3,
                                       {1, 4, 2,    //
                                        -2, -1, -1,  //
                                        1, -1, 0});
  data.defining_binomials = {
      {{4, 4}, {2, 5}},        // x5^2 = x3 x6
      {{0, 4}, {1, 5}},        // x1 x5 = x2 x6
      {{0, 2}, {1, 4}},        // x1 x3 = x2 x5
      {{0, 0, 1, 3}, {2, 2}},  // x1^2 x2 x4 = x3^2
      {{0, 0, 0, 3}, {2, 4}},  // x1^3 x4 = x3 x5
  };
  data.discovery_seed = make_mat(3, 4,
                                 {1, 0, 0, 1,  //
                                  0, 1, 0, 1,  //
                                  0, 0, 1, -6});
  return data;
}

std::vector<CheckResult> run_verification(const CounterexampleData& data) {
  std::vector<CheckResult> results;
  auto check = [&](const std::string& name, const std::function<bool()>& fn) {
    CheckResult r;
    r.name = name;
    try {
      r.pass = fn();
      if (!r.pass) r.detail = "condition is false";
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = e.what();
    }
    results.push_back(std::move(r));
  };

  const Mat& b = data.root_generators;
  const Mat& b1 = data.first_chart_generating_set;
  const Mat& b2 = data.second_chart_generating_set;
  const Mat& u_map = data.lattice_automorphism;

  check("root certificate validates on every generator", [&] {
    for (Index j = 0; j < b.cols(); ++j)
      if (data.root_certificate.dot(b.col(j)) < 1) return false;
    // Values 1 on the outer generators, at least 2 in between.
    if (data.root_certificate.dot(b.col(0)) != 1) return false;
    if (data.root_certificate.dot(b.col(5)) != 1) return false;
    for (Index j = 1; j <= 4; ++j)
      if (data.root_certificate.dot(b.col(j)) < 2) return false;
    return true;
  });

  check("pointedness certificate found for the root generators",
        [&] { return pointedness_certificate(b).has_value(); });

  check("non-saturation witness: point outside, its triple inside", [&] {
    const Vec& u = data.nonsaturation_point;
    if (is_member(u, b, data.root_certificate)) return false;
    const Vec triple = 3 * u;
    if (!is_member(triple, b, data.root_certificate)) return false;
    return equal(Vec(b.col(3) + b.col(5)), triple);
  });

  check("first chart base determinant", [&] {
    return det(select_columns(b, data.first_chart_base)) ==
           data.first_base_det;
  });

  check("nine replacement determinants", [&] {
    std::size_t k = 0;
    for (std::size_t slot = 0; slot < data.first_chart_base.size(); ++slot)
      for (Index g : {Index(1), Index(2), Index(4)})
        if (replacement_determinant(b, data.first_chart_base, slot, g) !=
            data.replacement_determinants[k++])
          return false;
    return true;
  });

  // The twelve listed chart generators collapse to eleven distinct vectors
  // (two differences coincide).
  const auto expected_first_chart = [&]() {
    std::vector<Vec> expected;
    VecSet seen;
    auto push = [&](const Vec& v) {
      if (seen.insert(v).second) expected.push_back(v);
    };
    for (Index h : data.first_chart_base) push(b.col(h));
    for (Index h : data.first_chart_base)
      for (Index g : {Index(1), Index(2), Index(4)})
        push(b.col(g) - b.col(h));
    return expected;
  };

  check("first chart generator set", [&] {
    const Mat computed = chart_generators(b, data.first_chart_base);
    const std::vector<Vec> expected = expected_first_chart();
    if (computed.cols() != static_cast<Index>(expected.size())) return false;
    VecSet computed_set;
    for (Index j = 0; j < computed.cols(); ++j)
      computed_set.insert(computed.col(j));
    for (const Vec& v : expected)
      if (!computed_set.count(v)) return false;
    return computed_set.size() == expected.size();
  });

  check("reduction identities among the chart generators", [&] {
    const Vec d21 = b.col(1) - b.col(0);
    const Vec d51 = b.col(4) - b.col(0);
    const Vec d24 = b.col(1) - b.col(3);
    if (!equal(Vec(b.col(4) - b.col(5)), d21)) return false;
    if (!equal(Vec(b.col(2) - b.col(5)), Vec(2 * d21))) return false;
    if (!equal(Vec(b.col(2) - b.col(0)), Vec(d21 + d51))) return false;
    if (!equal(Vec(b.col(2) - b.col(3)), Vec(d24 + d51))) return false;
    return true;
  });

  check("recorded eight generators sit inside the chart generator set", [&] {
    const Mat computed = chart_generators(b, data.first_chart_base);
    VecSet computed_set;
    for (Index j = 0; j < computed.cols(); ++j)
      computed_set.insert(computed.col(j));
    for (Index j = 0; j < b1.cols(); ++j)
      if (!computed_set.count(b1.col(j))) return false;
    return true;
  });

  check("first chart semigroup equals its recorded generating set", [&] {
    return semigroup_equals(chart_generators(b, data.first_chart_base), b1);
  });

  check("first chart certificate validates on every generator", [&] {
    for (Index j = 0; j < b1.cols(); ++j)
      if (data.first_chart_certificate.dot(b1.col(j)) < 1) return false;
    return true;
  });

  check("pointedness certificate found for the first chart generators",
        [&] { return pointedness_certificate(b1).has_value(); });

  check("second chart base determinant", [&] {
    return det(select_columns(b1, data.second_chart_base)) ==
           data.second_base_det;
  });

  check("exactly one replacement determinant vanishes on the second chart",
        [&] {
          // Swapping the second generator into the last base slot is the one
          // singular replacement, so that difference is absent.
          int zeros = 0;
          for (std::size_t slot = 0; slot < 3; ++slot)
            for (Index g : {Index(1), Index(2), Index(3), Index(5), Index(7)})
              if (replacement_determinant(b1, data.second_chart_base, slot,
                                          g) == 0)
                ++zeros;
          return zeros == 1 &&
                 replacement_determinant(b1, data.second_chart_base, 2, 1) == 0;
        });

  check("second chart generator set", [&] {
    const Mat computed = chart_generators(b1, data.second_chart_base);
    std::vector<Vec> expected;
    VecSet seen;
    auto push = [&](const Vec& v) {
      if (seen.insert(v).second) expected.push_back(v);
    };
    for (Index h : data.second_chart_base) push(b1.col(h));
    const std::vector<Index> outside = {1, 2, 3, 5, 7};
    for (Index h : {Index(0), Index(4)})
      for (Index g : outside) push(b1.col(g) - b1.col(h));
    for (Index g : {Index(2), Index(3), Index(5), Index(7)})
      push(b1.col(g) - b1.col(6));
    if (computed.cols() != static_cast<Index>(expected.size())) return false;
    VecSet computed_set;
    for (Index j = 0; j < computed.cols(); ++j)
      computed_set.insert(computed.col(j));
    for (const Vec& v : expected)
      if (!computed_set.count(v)) return false;
    return true;
  });

  check("second chart semigroup equals its recorded generating set", [&] {
    return semigroup_equals(chart_generators(b1, data.second_chart_base), b2);
  });

  check("automorphism is unimodular", [&] { return is_unimodular(u_map); });

  check("automorphism carries root generators to second chart generators",
        [&] { return equal(Mat(u_map * b), b2); });

  check("root semigroup is isomorphic to the second chart semigroup", [&] {
    const AffineSemigroup s = hilbert_basis(b);
    const AffineSemigroup t = hilbert_basis(b2);
    const std::optional<IsomorphismWitness> w = find_isomorphism(s, t);
    return w && verify_witness(*w, s, t);
  });

  check("defining binomials are lattice relations", [&] {
    for (const BinomialRelation& rel : data.defining_binomials)
      if (!relation_holds(rel, b)) return false;
    return data.defining_binomials.size() == 5;
  });

  check("twenty Jacobian minors reproduce the first chart", [&] {
    if (index_subsets(b.cols(), b.rows()).size() != 20) return false;
    return semigroup_equals(chart_via_minors(b, data.first_chart_base), b1);
  });

  check("fifty-six Jacobian minors reproduce the second chart", [&] {
    if (index_subsets(b1.cols(), b1.rows()).size() != 56) return false;
    return semigroup_equals(chart_via_minors(b1, data.second_chart_base), b2);
  });

  check("minor and difference constructions agree on the first chart",
        [&] { return cross_check(b, data.first_chart_base); });

  check("minor and difference constructions agree on the second chart",
        [&] { return cross_check(b1, data.second_chart_base); });

  return results;
}

}  // namespace nashtoric
