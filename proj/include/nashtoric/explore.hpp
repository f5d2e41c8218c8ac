#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nashtoric/blowup.hpp"
#include "nashtoric/isomorphism.hpp"

namespace nashtoric {

enum class NodeStatus {
  kFrontier,
  kExpanded,
  kSmooth,
  kCycle,
  kRejectedNonPointed,
  kPrunedDuplicate,
};

std::string to_string(NodeStatus status);
std::optional<NodeStatus> parse_status(const std::string& text);

// One chart in the iterated-blowup tree. `ref` points at the cycle ancestor
// (status kCycle) or the earlier equivalent node (status kPrunedDuplicate),
// with the verified witness alongside. Rejected charts carry no semigroup.
struct ExplorationNode {
  std::int64_t id = 0;
  std::optional<std::int64_t> parent;
  int depth = 0;
  std::optional<std::vector<Index>> base;
  std::optional<AffineSemigroup> semigroup;
  NodeStatus status = NodeStatus::kFrontier;
  std::optional<std::int64_t> ref;
  std::optional<IsomorphismWitness> witness;

  friend bool operator==(const ExplorationNode&, const ExplorationNode&);
};

struct CycleHit {
  std::int64_t node = 0;
  std::int64_t ancestor = 0;
  IsomorphismWitness witness;

  friend bool operator==(const CycleHit&, const CycleHit&) = default;
};

struct TruncationEvent {
  std::int64_t node = 0;
  std::string reason;

  friend bool operator==(const TruncationEvent&, const TruncationEvent&) =
      default;
};

struct IterateOptions {
  int sieve_depth = kDefaultSieveDepth;
  bool global_dedup = true;
  unsigned threads = 1;
  std::optional<std::int64_t> max_charts_per_node;
  std::optional<std::int64_t> chart_time_budget_ms;

  friend bool operator==(const IterateOptions&, const IterateOptions&) =
      default;
};

struct ExplorationReport {
  Mat seed;
  int max_depth = 0;
  IterateOptions options;
  std::vector<ExplorationNode> nodes;
  std::vector<CycleHit> cycles;
  // terminated: the frontier emptied out (every leaf smooth), i.e. the
  // variety was resolved within the explored depth. truncated: a resource
  // guard cut work; such a run must not be read as evidence of anything.
  bool terminated = false;
  bool truncated = false;
  std::vector<TruncationEvent> truncations;

  friend bool operator==(const ExplorationReport&, const ExplorationReport&);
};

// Node counts per depth and status.
std::map<int, std::map<NodeStatus, std::int64_t>> depth_statistics(
    const ExplorationReport& report);

// Breadth-first iterated Nash blowup. Smooth children are pruned; every
// pointed non-smooth child is compared against its ancestor chain (marking
// cycles) and, when global_dedup is on, against all previously kept nodes
// (marking pruned duplicates). Node ids are deterministic: breadth-first,
// base-subset order, independent of the thread count.
ExplorationReport iterate(const Mat& seed, int max_depth,
                          const IterateOptions& options = {});

struct TargetHit {
  std::int64_t node = 0;
  std::size_t target = 0;
  IsomorphismWitness witness;
};

// All (node, target) isomorphism hits with verified witnesses.
std::vector<TargetHit> check_against(
    const ExplorationReport& report,
    const std::vector<AffineSemigroup>& targets);

}  // namespace nashtoric
