#pragma once

#include <string>
#include <vector>

#include "nashtoric/semigroup.hpp"

namespace nashtoric {

// Built-in data for the dimension-3 counterexample: a pointed non-saturated
// semigroup whose second iterated Nash blowup contains a chart unimodularly
// equivalent to the semigroup itself. All values are unit-tested against the
// library's own computations.
struct CounterexampleData {
  Mat root_generators;            // six generators of the root semigroup
  Covec root_certificate;         // strictly positive functional for the root
  Vec nonsaturation_point;        // outside the semigroup, triple inside
  std::vector<Index> first_chart_base;       // indices into root_generators
  Int first_base_det;
  std::vector<Int> replacement_determinants;  // the nine column-swap values
  Mat first_chart_generating_set;             // eight generators of the chart
  Covec first_chart_certificate;
  std::vector<Index> second_chart_base;  // indices into the eight generators
  Int second_base_det;
  Mat second_chart_generating_set;  // six generators of the second chart
  Mat lattice_automorphism;         // unimodular map root -> second chart
  std::vector<BinomialRelation> defining_binomials;
  Mat discovery_seed;  // seed whose third blowup iteration hits the root
};

CounterexampleData counterexample_data();

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // set on failure
};

// Runs every verification step against the supplied data (normally
// counterexample_data(), possibly perturbed in test mode) and reports one
// result per step. Exceptions inside a step fail that step only.
std::vector<CheckResult> run_verification(const CounterexampleData& data);

}  // namespace nashtoric
