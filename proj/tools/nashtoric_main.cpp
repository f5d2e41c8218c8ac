// Command-line surface for the iterated Nash blowup toolkit: Hilbert bases,
// single blowup charts, iterated exploration with cycle detection, and the
// built-in counterexample verification.

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "nashtoric/blowup.hpp"
#include "nashtoric/counterexample.hpp"
#include "nashtoric/explore.hpp"
#include "nashtoric/lattice.hpp"
#include "nashtoric/log_io.hpp"
#include "nashtoric/matrix_io.hpp"

namespace {

using namespace nashtoric;

// Exit codes (stable; scripts branch on these):
//   0  success; for `iterate`: exploration terminated (all leaves smooth)
//   1  verification failure or unexpected error
//   2  parse or input error
//   3  input semigroup is not pointed
//  10  iterate: self-similarity cycle found
//  11  iterate: depth exhausted without termination or cycle
//  12  iterate: run truncated by a resource guard
constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitNotPointed = 3;
constexpr int kExitCycleFound = 10;
constexpr int kExitDepthExhausted = 11;
constexpr int kExitTruncated = 12;

std::string base_to_display(const std::vector<Index>& base) {
  std::string out;
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(base[i] + 1);  // 1-based for humans
  }
  return out;
}

std::vector<Index> parse_base_flag(const std::string& text, Index limit) {
  std::vector<Index> base;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    try {
      const long v = std::stol(token);
      if (v < 1 || v > limit)
        throw ParseError("base index " + token + " out of range 1.." +
                         std::to_string(limit));
      base.push_back(static_cast<Index>(v - 1));
    } catch (const std::logic_error&) {
      throw ParseError("bad base index '" + token + "'");
    }
  }
  if (base.empty()) throw ParseError("empty --base list");
  return base;
}

void print_semigroup(const AffineSemigroup& s) {
  std::cout << "hilbert basis (columns, lex order):\n"
            << format_matrix(s.basis());
  std::cout << "certificate: " << format_covector(s.certificate()) << "\n";
}

void print_witness(const IsomorphismWitness& w) {
  std::cout << "witness map:\n" << format_matrix(w.map);
  std::cout << "generator permutation:";
  for (Index p : w.permutation) std::cout << " " << p;
  std::cout << "\n";
}

int cmd_hilbert_basis(const std::string& input, int sieve_depth) {
  const Mat gens = parse_matrix_file(input);
  try {
    const AffineSemigroup s = hilbert_basis(gens, sieve_depth);
    std::cout << "rank: " << s.rank() << "\n";
    std::cout << "pointed: yes\n";
    print_semigroup(s);
    return kExitOk;
  } catch (const NotPointedError&) {
    std::cout << "pointed: no\n";
    return kExitNotPointed;
  }
}

// In canonical mode the working generating set is the Hilbert basis kept in
// input-column order (the Hilbert basis is always a subset of the input), so
// --base indices keep referring to the file's columns.
Mat canonical_working_set(const Mat& gens, int sieve_depth,
                          std::vector<Index>* dropped) {
  const AffineSemigroup s = hilbert_basis(gens, sieve_depth);
  VecSet basis_set;
  for (Index j = 0; j < s.size(); ++j) basis_set.insert(s.element(j));
  std::vector<Vec> keep;
  VecSet used;
  for (Index j = 0; j < gens.cols(); ++j) {
    Vec c = gens.col(j);
    if (basis_set.count(c) && !used.count(c)) {
      used.insert(c);
      keep.push_back(std::move(c));
    } else if (dropped) {
      dropped->push_back(j);
    }
  }
  return from_columns(gens.rows(), keep);
}

int cmd_blowup(const std::string& input, const std::string& base_flag,
               bool all, bool explicit_generators, int sieve_depth) {
  const Mat gens = parse_matrix_file(input);
  Mat working;
  if (explicit_generators) {
    working = gens;
  } else {
    std::vector<Index> dropped;
    try {
      working = canonical_working_set(gens, sieve_depth, &dropped);
    } catch (const NotPointedError&) {
      std::cout << "pointed: no\n";
      return kExitNotPointed;
    }
    for (Index j : dropped)
      std::cout << "note: input column " << (j + 1)
                << " is reducible or repeated; dropped\n";
  }

  std::vector<std::vector<Index>> bases;
  if (!base_flag.empty()) {
    const std::vector<Index> base = parse_base_flag(base_flag, working.cols());
    if (static_cast<Index>(base.size()) != working.rows())
      throw ParseError("--base needs exactly " +
                       std::to_string(working.rows()) + " indices");
    const Int base_det = det(select_columns(working, base));
    if (base_det == 0)
      throw ParseError("base " + base_flag + " has zero determinant");
    bases.push_back(base);
  } else {
    (void)all;  // default behaviour
    try {
      bases = enumerate_bases(working, working.rows());
    } catch (const DimensionError& e) {
      throw ParseError(e.what());
    }
  }

  for (const std::vector<Index>& base : bases) {
    Chart chart = chart_with_explicit_generators(working, base, sieve_depth);
    std::cout << "chart base: " << base_to_display(base)
              << "  determinant: " << chart.base_det.get_str() << "\n";
    std::cout << "chart generators (columns):\n"
              << format_matrix(chart.generators);
    if (chart.semigroup) {
      print_semigroup(*chart.semigroup);
      std::cout << (is_smooth(*chart.semigroup) ? "smooth: yes\n"
                                                : "smooth: no\n");
    } else {
      std::cout << "rejected: non-pointed\n";
    }
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_iterate(const std::string& input, int max_depth,
                const std::string& log_path,
                const std::vector<std::string>& check_files,
                const IterateOptions& options) {
  const Mat seed = parse_matrix_file(input);
  ExplorationReport report;
  try {
    report = iterate(seed, max_depth, options);
  } catch (const NotPointedError&) {
    std::cout << "pointed: no\n";
    return kExitNotPointed;
  }

  if (!log_path.empty()) write_log(report, log_path);

  const auto stats = depth_statistics(report);
  std::cout << "nodes: " << report.nodes.size() << "\n";
  for (const auto& [depth, by_status] : stats) {
    std::cout << "depth " << depth << ":";
    for (const auto& [status, count] : by_status)
      std::cout << " " << to_string(status) << "=" << count;
    std::cout << "\n";
  }
  std::cout << "terminated: " << (report.terminated ? "yes" : "no") << "\n";
  if (report.truncated) {
    std::cout << "warning: run truncated by resource guards\n";
    for (const TruncationEvent& e : report.truncations)
      std::cout << "  node " << e.node << ": " << e.reason << "\n";
  }

  for (const CycleHit& cycle : report.cycles) {
    std::cout << "cycle: node " << cycle.node << " (depth "
              << report.nodes[static_cast<std::size_t>(cycle.node)].depth
              << ") is isomorphic to ancestor " << cycle.ancestor << "\n";
    print_witness(cycle.witness);
  }

  std::vector<AffineSemigroup> targets;
  for (const std::string& file : check_files)
    targets.push_back(hilbert_basis(parse_matrix_file(file),
                                    options.sieve_depth));
  if (!targets.empty()) {
    const std::vector<TargetHit> hits = check_against(report, targets);
    for (const TargetHit& hit : hits) {
      std::cout << "hit: node " << hit.node << " (depth "
                << report.nodes[static_cast<std::size_t>(hit.node)].depth
                << ") is isomorphic to target " << hit.target << " ("
                << check_files[hit.target] << ")\n";
      print_witness(hit.witness);
    }
    if (hits.empty()) std::cout << "no target hits\n";
  }

  if (report.truncated) return kExitTruncated;
  if (!report.cycles.empty()) return kExitCycleFound;
  return report.terminated ? kExitOk : kExitDepthExhausted;
}

int cmd_verify(bool perturb) {
  CounterexampleData data = counterexample_data();
  if (perturb) data.root_generators(0, 0) += 1;
  const std::vector<CheckResult> results = run_verification(data);
  bool all_pass = true;
  for (const CheckResult& r : results) {
    std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
    if (!r.pass && !r.detail.empty()) std::cout << "  [" << r.detail << "]";
    std::cout << "\n";
    all_pass = all_pass && r.pass;
  }
  std::cout << (all_pass ? "all checks passed" : "checks FAILED") << " ("
            << results.size() << " total)\n";
  return all_pass ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact iterated Nash blowups of affine toric semigroups"};
  app.require_subcommand(1);

  std::string input, base_flag, log_path;
  std::vector<std::string> check_files;
  bool all = false, explicit_generators = false, perturb = false;
  bool no_dedup = false;
  int max_depth = 1;
  int sieve_depth = kDefaultSieveDepth;
  std::int64_t max_charts = 0, time_budget = 0;
  unsigned threads = 1;

  auto* hb = app.add_subcommand("hilbert-basis",
                                "Hilbert basis and pointedness certificate");
  hb->add_option("input", input, "matrix file, columns are generators")
      ->required();
  hb->add_option("--sieve-depth", sieve_depth, "sum depth for the sieve pass");

  auto* blow = app.add_subcommand("blowup", "Nash blowup charts");
  blow->add_option("input", input)->required();
  blow->add_option("--base", base_flag,
                   "1-based column indices of one base subset, e.g. 1,4,6");
  blow->add_flag("--all", all, "emit every chart (default)");
  blow->add_flag("--explicit-generators", explicit_generators,
                 "use the input columns verbatim, skipping canonicalization");
  blow->add_option("--sieve-depth", sieve_depth);

  auto* it = app.add_subcommand("iterate", "iterated blowup exploration");
  it->add_option("input", input)->required();
  it->add_option("--max-depth", max_depth)->required();
  it->add_option("--log", log_path, "write the exploration log here");
  it->add_option("--check-against", check_files,
                 "matrix files; report nodes isomorphic to these semigroups");
  it->add_option("--sieve-depth", sieve_depth);
  it->add_option("--max-charts", max_charts, "cap charts per node (guard)");
  it->add_option("--time-budget", time_budget,
                 "per-chart Hilbert basis budget in ms (guard)");
  it->add_option("--threads", threads, "worker threads for expansion");
  it->add_flag("--no-global-dedup", no_dedup,
               "disable cross-branch isomorphism dedup");

  auto* verify = app.add_subcommand(
      "verify-counterexample", "run every built-in counterexample check");
  auto* perturb_flag = verify->add_flag(
      "--perturb", perturb, "test mode: corrupt the built-in data first");
  perturb_flag->group("");  // hidden

  CLI11_PARSE(app, argc, argv);

  try {
    if (hb->parsed()) return cmd_hilbert_basis(input, sieve_depth);
    if (blow->parsed())
      return cmd_blowup(input, base_flag, all, explicit_generators,
                        sieve_depth);
    if (it->parsed()) {
      IterateOptions options;
      options.sieve_depth = sieve_depth;
      options.global_dedup = !no_dedup;
      options.threads = threads;
      if (max_charts > 0) options.max_charts_per_node = max_charts;
      if (time_budget > 0) options.chart_time_budget_ms = time_budget;
      return cmd_iterate(input, max_depth, log_path, check_files, options);
    }
    if (verify->parsed()) return cmd_verify(perturb);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const NotPointedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotPointed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitFail;
}
