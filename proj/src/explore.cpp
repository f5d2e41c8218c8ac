#include "nashtoric/explore.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <sstream>
#include <thread>

namespace nashtoric {

std::string to_string(NodeStatus status) {
  switch (status) {
    case NodeStatus::kFrontier:
      return "frontier";
    case NodeStatus::kExpanded:
      return "expanded";
    case NodeStatus::kSmooth:
      return "smooth";
    case NodeStatus::kCycle:
      return "cycle";
    case NodeStatus::kRejectedNonPointed:
      return "rejected-nonpointed";
    case NodeStatus::kPrunedDuplicate:
      return "pruned-duplicate";
  }
  return "unknown";
}

std::optional<NodeStatus> parse_status(const std::string& text) {
  for (NodeStatus status :
       {NodeStatus::kFrontier, NodeStatus::kExpanded, NodeStatus::kSmooth,
        NodeStatus::kCycle, NodeStatus::kRejectedNonPointed,
        NodeStatus::kPrunedDuplicate})
    if (to_string(status) == text) return status;
  return std::nullopt;
}

bool operator==(const ExplorationNode& a, const ExplorationNode& b) {
  return a.id == b.id && a.parent == b.parent && a.depth == b.depth &&
         a.base == b.base && a.semigroup == b.semigroup &&
         a.status == b.status && a.ref == b.ref && a.witness == b.witness;
}

bool operator==(const ExplorationReport& a, const ExplorationReport& b) {
  return equal(a.seed, b.seed) && a.max_depth == b.max_depth &&
         a.options == b.options && a.nodes == b.nodes && a.cycles == b.cycles &&
         a.terminated == b.terminated && a.truncated == b.truncated &&
         a.truncations == b.truncations;
}

std::map<int, std::map<NodeStatus, std::int64_t>> depth_statistics(
    const ExplorationReport& report) {
  std::map<int, std::map<NodeStatus, std::int64_t>> stats;
  for (const ExplorationNode& node : report.nodes)
    ++stats[node.depth][node.status];
  return stats;
}

namespace {

// Runs f(0..count-1) on the given number of threads. Results must be written
// to pre-sized slots; the first exception (by job index) is rethrown.
template <typename F>
void parallel_for(std::size_t count, unsigned threads, F&& f) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  auto worker = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned n = std::min<unsigned>(threads, static_cast<unsigned>(count));
  pool.reserve(n);
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);
}

std::string base_label(const std::vector<Index>& base) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (i) out << ",";
    out << base[i];
  }
  out << "]";
  return out.str();
}

struct Expansion {
  std::vector<Chart> charts;
  bool chart_list_truncated = false;
  std::vector<std::vector<Index>> timed_out_bases;
};

Expansion expand_node(const AffineSemigroup& s, const IterateOptions& opts) {
  Expansion out;
  std::vector<std::vector<Index>> bases = enumerate_bases(s.basis(), s.rank());
  if (opts.max_charts_per_node &&
      static_cast<std::int64_t>(bases.size()) > *opts.max_charts_per_node) {
    bases.resize(static_cast<std::size_t>(*opts.max_charts_per_node));
    out.chart_list_truncated = true;
  }
  for (const std::vector<Index>& base : bases) {
    SearchLimits limits;
    if (opts.chart_time_budget_ms)
      limits.deadline = std::chrono::steady_clock::now() +
                        std::chrono::milliseconds(*opts.chart_time_budget_ms);
    try {
      out.charts.push_back(chart_with_explicit_generators(
          s.basis(), base, opts.sieve_depth, limits));
    } catch (const TimeoutError&) {
      out.timed_out_bases.push_back(base);
    }
  }
  return out;
}

}  // namespace

ExplorationReport iterate(const Mat& seed, int max_depth,
                          const IterateOptions& options) {
  ExplorationReport report;
  report.seed = seed;
  report.max_depth = max_depth;
  report.options = options;

  AffineSemigroup root = hilbert_basis(seed, options.sieve_depth);

  std::map<std::int64_t, Fingerprint> prints;
  std::vector<std::int64_t> seen;  // kept non-smooth nodes, id order
  auto print_of = [&](std::int64_t id) -> const Fingerprint& {
    auto it = prints.find(id);
    if (it == prints.end())
      it = prints.emplace(id, fingerprint(*report.nodes[static_cast<std::size_t>(id)].semigroup))
               .first;
    return it->second;
  };

  ExplorationNode root_node;
  root_node.id = 0;
  root_node.depth = 0;
  root_node.semigroup = std::move(root);
  root_node.status = is_smooth(*root_node.semigroup) ? NodeStatus::kSmooth
                                                     : NodeStatus::kFrontier;
  report.nodes.push_back(std::move(root_node));

  std::vector<std::int64_t> frontier;
  if (report.nodes[0].status == NodeStatus::kFrontier) {
    frontier.push_back(0);
    seen.push_back(0);
  }

  for (int depth = 0; depth < max_depth && !frontier.empty(); ++depth) {
    std::vector<Expansion> expansions(frontier.size());
    parallel_for(frontier.size(), options.threads, [&](std::size_t i) {
      const ExplorationNode& node =
          report.nodes[static_cast<std::size_t>(frontier[i])];
      expansions[i] = expand_node(*node.semigroup, options);
    });

    std::vector<std::int64_t> next_frontier;
    for (std::size_t fi = 0; fi < frontier.size(); ++fi) {
      const std::int64_t parent_id = frontier[fi];
      Expansion& exp = expansions[fi];
      if (exp.chart_list_truncated) {
        report.truncated = true;
        report.truncations.push_back(
            {parent_id, "max-charts-per-node cap reached"});
      }
      for (const std::vector<Index>& base : exp.timed_out_bases) {
        report.truncated = true;
        report.truncations.push_back(
            {parent_id, "chart time budget exceeded at base " +
                            base_label(base)});
      }
      for (Chart& chart : exp.charts) {
        ExplorationNode node;
        node.id = static_cast<std::int64_t>(report.nodes.size());
        node.parent = parent_id;
        node.depth = depth + 1;
        node.base = chart.base;
        if (!chart.semigroup) {
          node.status = NodeStatus::kRejectedNonPointed;
          report.nodes.push_back(std::move(node));
          continue;
        }
        node.semigroup = std::move(chart.semigroup);
        if (is_smooth(*node.semigroup)) {
          node.status = NodeStatus::kSmooth;
          report.nodes.push_back(std::move(node));
          continue;
        }
        const Fingerprint fp = fingerprint(*node.semigroup);

        // Ancestor chain first: a hit freezes the branch as a cycle.
        bool resolved = false;
        for (std::optional<std::int64_t> a = parent_id; a && !resolved;
             a = report.nodes[static_cast<std::size_t>(*a)].parent) {
          if (fp != print_of(*a)) continue;
          std::optional<IsomorphismWitness> witness = find_isomorphism(
              *node.semigroup,
              *report.nodes[static_cast<std::size_t>(*a)].semigroup);
          if (witness) {
            node.status = NodeStatus::kCycle;
            node.ref = *a;
            node.witness = std::move(witness);
            resolved = true;
          }
        }
        if (!resolved && options.global_dedup) {
          for (const std::int64_t other : seen) {
            if (fp != print_of(other)) continue;
            std::optional<IsomorphismWitness> witness = find_isomorphism(
                *node.semigroup,
                *report.nodes[static_cast<std::size_t>(other)].semigroup);
            if (witness) {
              node.status = NodeStatus::kPrunedDuplicate;
              node.ref = other;
              node.witness = std::move(witness);
              resolved = true;
              break;
            }
          }
        }
        const std::int64_t id = node.id;
        if (!resolved) {
          node.status = NodeStatus::kFrontier;
          next_frontier.push_back(id);
        }
        const bool keep = !resolved || node.status == NodeStatus::kCycle;
        report.nodes.push_back(std::move(node));
        if (keep) {
          seen.push_back(id);
          prints.emplace(id, fp);
        }
      }
      report.nodes[static_cast<std::size_t>(parent_id)].status =
          NodeStatus::kExpanded;
    }
    frontier = std::move(next_frontier);
  }

  report.terminated = frontier.empty();
  for (const ExplorationNode& node : report.nodes)
    if (node.status == NodeStatus::kCycle)
      report.cycles.push_back({node.id, *node.ref, *node.witness});
  return report;
}

std::vector<TargetHit> check_against(
    const ExplorationReport& report,
    const std::vector<AffineSemigroup>& targets) {
  std::vector<TargetHit> hits;
  if (targets.empty()) return hits;
  const Index rank = report.seed.rows();
  std::vector<Fingerprint> target_prints;
  for (const AffineSemigroup& t : targets) {
    if (t.rank() != rank)
      throw DimensionError("check_against: target rank mismatch");
    target_prints.push_back(fingerprint(t));
  }
  for (const ExplorationNode& node : report.nodes) {
    if (!node.semigroup) continue;
    const Fingerprint fp = fingerprint(*node.semigroup);
    for (std::size_t t = 0; t < targets.size(); ++t) {
      if (fp != target_prints[t]) continue;
      std::optional<IsomorphismWitness> witness =
          find_isomorphism(*node.semigroup, targets[t]);
      if (witness) hits.push_back({node.id, t, std::move(*witness)});
    }
  }
  return hits;
}

}  // namespace nashtoric
