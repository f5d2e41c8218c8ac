// Acceptance suite: runs each top-level criterion end to end and prints one
// PASS/FAIL line per criterion. Criterion 7 (seed provenance) is the heavy,
// flag-gated run: include it with --extended, or run it alone with
// --extended-only.

#include <chrono>
#include <cstring>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "nashtoric/blowup.hpp"
#include "nashtoric/counterexample.hpp"
#include "nashtoric/explore.hpp"
#include "nashtoric/isomorphism.hpp"
#include "nashtoric/jacobian.hpp"
#include "nashtoric/lattice.hpp"
#include "nashtoric/log_io.hpp"
#include "test_support.hpp"

using namespace nashtoric;
using namespace testsupport;

namespace {

int g_failures = 0;

void run(const std::string& name, bool (*fn)()) {
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string detail;
  try {
    ok = fn();
  } catch (const std::exception& e) {
    detail = e.what();
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "  (" << seconds
            << "s)";
  if (!ok && !detail.empty()) std::cout << "  [" << detail << "]";
  std::cout << std::endl;
  if (!ok) ++g_failures;
}

bool expect(bool condition, const char* what) {
  if (!condition) std::cout << "  failed: " << what << "\n";
  return condition;
}

// Criterion 1: the recorded determinant values, the automorphism identity
// and its unimodularity, all exact.
bool criterion1() {
  const CounterexampleData d = counterexample_data();
  bool ok = true;
  ok &= expect(det(select_columns(d.root_generators, d.first_chart_base)) ==
                   d.first_base_det,
               "first base determinant");
  std::size_t k = 0;
  for (std::size_t slot = 0; slot < 3; ++slot)
    for (Index g : {Index(1), Index(2), Index(4)})
      ok &= expect(replacement_determinant(d.root_generators,
                                           d.first_chart_base, slot, g) ==
                       d.replacement_determinants[k++],
                   "replacement determinant sequence");
  ok &= expect(det(select_columns(d.first_chart_generating_set,
                                  d.second_chart_base)) == d.second_base_det,
               "second base determinant");
  ok &= expect(equal(Mat(d.lattice_automorphism * d.root_generators),
                     d.second_chart_generating_set),
               "automorphism times root generators");
  ok &= expect(is_unimodular(d.lattice_automorphism),
               "automorphism unimodularity");
  return ok;
}

// Criterion 2: pointedness certificates on both generator sets, the recorded
// functionals validate, and the witness point behaves as recorded.
bool criterion2() {
  const CounterexampleData d = counterexample_data();
  bool ok = true;
  ok &= expect(pointedness_certificate(d.root_generators).has_value(),
               "certificate exists for the root");
  ok &= expect(
      pointedness_certificate(d.first_chart_generating_set).has_value(),
      "certificate exists for the first chart");
  for (Index j = 0; j < d.root_generators.cols(); ++j)
    ok &= expect(d.root_certificate.dot(d.root_generators.col(j)) >= 1,
                 "recorded root functional validates");
  for (Index j = 0; j < d.first_chart_generating_set.cols(); ++j)
    ok &= expect(d.first_chart_certificate.dot(
                     d.first_chart_generating_set.col(j)) >= 1,
                 "recorded chart functional validates");
  ok &= expect(!is_member(d.nonsaturation_point, d.root_generators,
                          d.root_certificate),
               "witness point lies outside");
  ok &= expect(is_member(Vec(3 * d.nonsaturation_point), d.root_generators,
                         d.root_certificate)
                   .has_value(),
               "witness triple lies inside");
  return ok;
}

// Criterion 3: the chart generator sets, their reductions, and the recorded
// reduction identities.
bool criterion3() {
  const CounterexampleData d = counterexample_data();
  const Mat& b = d.root_generators;
  bool ok = true;

  const Mat ga = chart_generators(b, d.first_chart_base);
  VecSet expected;
  for (Index h : d.first_chart_base) expected.insert(b.col(h));
  for (Index h : d.first_chart_base)
    for (Index g : {Index(1), Index(2), Index(4)})
      expected.insert(b.col(g) - b.col(h));
  VecSet got;
  for (Index j = 0; j < ga.cols(); ++j) got.insert(ga.col(j));
  ok &= expect(got == expected, "first chart generator set");

  ok &= expect(semigroup_equals(ga, d.first_chart_generating_set),
               "first chart semigroup equals recorded generators");

  const Chart second = chart_with_explicit_generators(
      d.first_chart_generating_set, d.second_chart_base);
  ok &= expect(second.semigroup.has_value(), "second chart pointed");
  ok &= expect(semigroup_equals(second.semigroup->basis(),
                                d.second_chart_generating_set),
               "second chart semigroup equals recorded generators");

  const Vec d21 = b.col(1) - b.col(0);
  const Vec d51 = b.col(4) - b.col(0);
  const Vec d24 = b.col(1) - b.col(3);
  ok &= expect(equal(Vec(b.col(4) - b.col(5)), d21), "reduction identity 1");
  ok &= expect(equal(Vec(b.col(2) - b.col(5)), Vec(2 * d21)),
               "reduction identity 2");
  ok &= expect(equal(Vec(b.col(2) - b.col(0)), Vec(d21 + d51)),
               "reduction identity 3");
  ok &= expect(equal(Vec(b.col(2) - b.col(3)), Vec(d24 + d51)),
               "reduction identity 4");
  return ok;
}

// Criterion 4: the headline fact end to end — a verified depth-2 cycle back to the
// root.
bool criterion4() {
  const CounterexampleData d = counterexample_data();
  const ExplorationReport report = iterate(d.root_generators, 2);
  for (const CycleHit& cycle : report.cycles) {
    const ExplorationNode& node =
        report.nodes[static_cast<std::size_t>(cycle.node)];
    if (node.depth != 2 || cycle.ancestor != 0) continue;
    const ExplorationNode& root = report.nodes[0];
    if (verify_witness(cycle.witness, *node.semigroup, *root.semigroup))
      return true;
  }
  std::cout << "  failed: no verified depth-2 cycle to the root\n";
  return false;
}

// Criterion 5: the Jacobian-minor construction agrees with the difference
// construction on both recorded charts.
bool criterion5() {
  const CounterexampleData d = counterexample_data();
  bool ok = true;
  ok &= expect(index_subsets(6, 3).size() == 20, "twenty row triples");
  ok &= expect(index_subsets(8, 3).size() == 56, "fifty-six row triples");
  ok &= expect(
      semigroup_equals(chart_via_minors(d.root_generators, d.first_chart_base),
                       d.first_chart_generating_set),
      "minor chart equals first generating set");
  ok &= expect(semigroup_equals(chart_via_minors(d.first_chart_generating_set,
                                                 d.second_chart_base),
                                d.second_chart_generating_set),
               "minor chart equals second generating set");
  ok &= expect(cross_check(d.root_generators, d.first_chart_base),
               "cross-check on the first chart");
  ok &= expect(cross_check(d.first_chart_generating_set, d.second_chart_base),
               "cross-check on the second chart");
  return ok;
}

// Criterion 6: the five defining binomials are exact lattice relations.
bool criterion6() {
  const CounterexampleData d = counterexample_data();
  bool ok = expect(d.defining_binomials.size() == 5, "five binomials");
  for (const BinomialRelation& rel : d.defining_binomials)
    ok &= expect(relation_holds(rel, d.root_generators), "binomial relation");
  return ok;
}

// Criterion 7 (extended): provenance of the counterexample from the recorded
// discovery seed — a depth-3 node isomorphic to the root semigroup, none at
// depths 1-2, no truncation.
//
// Known to fail on its depth-3 half: two independent implementations place
// the first isomorphic node at depth 4 (the diagnostic below reports what was
// actually found). The criterion is kept as recorded rather than adjusted to
// the observed depth.
bool criterion7() {
  const CounterexampleData d = counterexample_data();
  const AffineSemigroup target = hilbert_basis(d.root_generators);
  IterateOptions options;
  options.global_dedup = true;
  const ExplorationReport report = iterate(d.discovery_seed, 3, options);

  bool ok = expect(!report.truncated, "run not truncated");
  const std::vector<TargetHit> hits = check_against(report, {target});
  bool depth3 = false, shallow = false;
  for (const TargetHit& hit : hits) {
    const int depth = report.nodes[static_cast<std::size_t>(hit.node)].depth;
    if (depth == 3) depth3 = true;
    if (depth <= 2) shallow = true;
  }
  ok &= expect(!shallow, "no isomorphic node at depths 1-2");
  ok &= expect(depth3, "isomorphic node found at depth 3");

  // Diagnostic: where the target class actually first appears.
  const ExplorationReport deeper = iterate(d.discovery_seed, 4, options);
  int first = -1;
  for (const TargetHit& hit : check_against(deeper, {target})) {
    const int depth = deeper.nodes[static_cast<std::size_t>(hit.node)].depth;
    if (first < 0 || depth < first) first = depth;
  }
  std::cout << "  diagnostic: first isomorphic node observed at depth "
            << first << " (depth-4 scan)\n";
  return ok;
}

// Criterion 8: the property suite.
bool criterion8() {
  bool ok = true;
  std::mt19937_64 rng(618033988);

  // (a)+(b): Hilbert bases match the bounded-enumeration oracle, and the
  // sieve never changes the result, on 200 random pointed instances.
  int done = 0;
  while (done < 200) {
    const Index dim = 2 + static_cast<Index>(rng() % 2);
    const std::optional<Mat> gens = sample_pointed(rng, dim);
    if (!gens) continue;
    const Covec cert = *pointedness_certificate(*gens);
    const auto oracle = oracle_hilbert_basis(*gens, cert);
    if (!oracle) continue;
    ++done;
    const AffineSemigroup s = hilbert_basis(*gens);
    if (!equal(s.basis(), from_columns(dim, *oracle))) {
      ok = expect(false, "oracle equivalence");
      break;
    }
    if (!equal(hilbert_basis(*gens, 1).basis(), s.basis())) {
      ok = expect(false, "sieve-then-reduce equals reduce-without-sieve");
      break;
    }
  }
  std::cout << "  (a,b) oracle + sieve agreement on " << done
            << " random instances\n";

  // (c): witness recovery for random unimodular images.
  const AffineSemigroup root =
      hilbert_basis(counterexample_data().root_generators);
  int recovered = 0;
  for (int trial = 0; trial < 100; ++trial) {
    AffineSemigroup src = root;
    if (trial % 2 == 0) {
      std::optional<Mat> gens;
      while (!(gens = sample_pointed(rng, 3))) {
      }
      src = hilbert_basis(*gens);
    }
    const Mat u = random_unimodular(rng, 3);
    const AffineSemigroup dst = hilbert_basis(Mat(u * src.basis()));
    const std::optional<IsomorphismWitness> w = find_isomorphism(src, dst);
    if (!w || !verify_witness(*w, src, dst)) {
      ok = expect(false, "isomorphism recovery");
      break;
    }
    ++recovered;
  }
  std::cout << "  (c) recovered " << recovered << "/100 witnesses\n";

  // (d): blowing up a smooth semigroup returns charts equal to the input.
  for (int trial = 0; trial < 50; ++trial) {
    const Index dim = 2 + static_cast<Index>(rng() % 2);
    const AffineSemigroup s = hilbert_basis(random_unimodular(rng, dim));
    const std::vector<Chart> charts = nash_blowup(s);
    if (charts.size() != 1 || !charts[0].semigroup ||
        !equal(charts[0].semigroup->basis(), s.basis())) {
      ok = expect(false, "smooth fixed point");
      break;
    }
  }

  // (e): serial and parallel runs produce bit-identical reports.
  IterateOptions serial;
  serial.threads = 1;
  IterateOptions parallel;
  parallel.threads = 4;
  const ExplorationReport a =
      iterate(counterexample_data().root_generators, 2, serial);
  ExplorationReport b =
      iterate(counterexample_data().root_generators, 2, parallel);
  b.options.threads = serial.threads;  // recorded option, not content
  std::ostringstream la, lb;
  write_log(a, la);
  write_log(b, lb);
  ok &= expect(la.str() == lb.str(), "serial/parallel logs bit-identical");

  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  bool extended = false, extended_only = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--extended") == 0) extended = true;
    if (std::strcmp(argv[i], "--extended-only") == 0) extended_only = true;
  }

  if (!extended_only) {
    run("criterion-1 recorded-constant regression", criterion1);
    run("criterion-2 pointedness and saturation witness", criterion2);
    run("criterion-3 chart replication", criterion3);
    run("criterion-4 self-similarity cycle at depth two", criterion4);
    run("criterion-5 Jacobian minor cross-check", criterion5);
    run("criterion-6 binomial relations", criterion6);
  }
  if (extended || extended_only)
    run("criterion-7 discovery-seed provenance (extended)", criterion7);
  if (!extended_only) run("criterion-8 property suite", criterion8);

  if (g_failures)
    std::cout << g_failures << " criterion(s) FAILED" << std::endl;
  else
    std::cout << "all criteria passed" << std::endl;
  return g_failures ? 1 : 0;
}
