#include "nashtoric/log_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace nashtoric {

namespace {

using nlohmann::json;

json mat_to_json(const Mat& m) {
  json cols = json::array();
  for (Index j = 0; j < m.cols(); ++j) {
    json col = json::array();
    for (Index i = 0; i < m.rows(); ++i) col.push_back(m(i, j).get_str());
    cols.push_back(std::move(col));
  }
  return cols;
}

json covec_to_json(const Covec& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(v(i).get_str());
  return out;
}

json witness_to_json(const IsomorphismWitness& w) {
  json out;
  out["map"] = mat_to_json(w.map);
  out["perm"] = w.permutation;
  return out;
}

json node_to_json(const ExplorationNode& node) {
  json out;
  out["id"] = node.id;
  out["parent"] = node.parent ? json(*node.parent) : json(nullptr);
  out["depth"] = node.depth;
  out["base"] = node.base ? json(*node.base) : json(nullptr);
  if (node.semigroup) {
    out["hb"] = mat_to_json(node.semigroup->basis());
    out["cert"] = covec_to_json(node.semigroup->certificate());
  } else {
    out["hb"] = nullptr;
    out["cert"] = nullptr;
  }
  out["status"] = to_string(node.status);
  if (node.ref) out["ref"] = *node.ref;
  if (node.witness) out["witness"] = witness_to_json(*node.witness);
  return out;
}

struct LineContext {
  std::size_t line = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("log parse error at line " + std::to_string(line) + ": " +
                     what);
  }
};

const json& field(const LineContext& ctx, const json& obj,
                  const std::string& name) {
  const auto it = obj.find(name);
  if (it == obj.end()) ctx.fail("field '" + name + "' missing");
  return *it;
}

Int parse_int_entry(const LineContext& ctx, const json& j,
                    const std::string& name) {
  if (!j.is_string()) ctx.fail("field '" + name + "' must hold decimal strings");
  try {
    return Int(j.get<std::string>());
  } catch (const std::invalid_argument&) {
    ctx.fail("field '" + name + "' holds a malformed integer '" +
             j.get<std::string>() + "'");
  }
}

Mat json_to_mat(const LineContext& ctx, const json& j, Index rank,
                const std::string& name) {
  if (!j.is_array()) ctx.fail("field '" + name + "' must be a column list");
  Mat m(rank, static_cast<Index>(j.size()));
  for (Index c = 0; c < m.cols(); ++c) {
    const json& col = j[static_cast<std::size_t>(c)];
    if (!col.is_array() || static_cast<Index>(col.size()) != rank)
      ctx.fail("field '" + name + "' column " + std::to_string(c) +
               " does not have " + std::to_string(rank) + " entries");
    for (Index r = 0; r < rank; ++r)
      m(r, c) = parse_int_entry(ctx, col[static_cast<std::size_t>(r)], name);
  }
  return m;
}

Covec json_to_covec(const LineContext& ctx, const json& j, Index rank,
                    const std::string& name) {
  if (!j.is_array() || static_cast<Index>(j.size()) != rank)
    ctx.fail("field '" + name + "' must hold " + std::to_string(rank) +
             " entries");
  Covec v(rank);
  for (Index i = 0; i < rank; ++i)
    v(i) = parse_int_entry(ctx, j[static_cast<std::size_t>(i)], name);
  return v;
}

std::vector<Index> json_to_indices(const LineContext& ctx, const json& j,
                                   const std::string& name) {
  if (!j.is_array()) ctx.fail("field '" + name + "' must be an index list");
  std::vector<Index> out;
  for (const json& e : j) {
    if (!e.is_number_integer())
      ctx.fail("field '" + name + "' must hold integers");
    out.push_back(e.get<Index>());
  }
  return out;
}

IsomorphismWitness json_to_witness(const LineContext& ctx, const json& j,
                                   Index rank) {
  if (!j.is_object()) ctx.fail("field 'witness' must be an object");
  IsomorphismWitness w;
  w.map = json_to_mat(ctx, field(ctx, j, "map"), rank, "witness.map");
  if (w.map.cols() != rank) ctx.fail("field 'witness.map' must be square");
  w.permutation = json_to_indices(ctx, field(ctx, j, "perm"), "witness.perm");
  return w;
}

}  // namespace

void write_log(const ExplorationReport& report, std::ostream& out) {
  json header;
  header["version"] = 1;
  header["rank"] = report.seed.rows();
  header["seed"] = mat_to_json(report.seed);
  json options;
  options["max_depth"] = report.max_depth;
  options["sieve_depth"] = report.options.sieve_depth;
  options["global_dedup"] = report.options.global_dedup;
  options["threads"] = report.options.threads;
  options["max_charts_per_node"] =
      report.options.max_charts_per_node
          ? json(*report.options.max_charts_per_node)
          : json(nullptr);
  options["chart_time_budget_ms"] =
      report.options.chart_time_budget_ms
          ? json(*report.options.chart_time_budget_ms)
          : json(nullptr);
  header["options"] = std::move(options);
  out << header.dump() << "\n";

  for (const ExplorationNode& node : report.nodes)
    out << node_to_json(node).dump() << "\n";

  json truncations = json::array();
  for (const TruncationEvent& e : report.truncations)
    truncations.push_back({{"node", e.node}, {"reason", e.reason}});
  json summary;
  summary["summary"] = {{"terminated", report.terminated},
                        {"truncated", report.truncated},
                        {"truncations", std::move(truncations)}};
  out << summary.dump() << "\n";
  if (!out) throw Error("write_log: stream failure");
}

void write_log(const ExplorationReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("write_log: cannot open '" + path + "'");
  write_log(report, out);
}

ExplorationReport read_log(std::istream& in) {
  ExplorationReport report;
  LineContext ctx;
  std::string line;
  bool saw_header = false;
  bool saw_summary = false;
  Index rank = 0;

  while (std::getline(in, line)) {
    ++ctx.line;
    if (line.empty()) continue;
    if (saw_summary) ctx.fail("record after the summary line");
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      ctx.fail(e.what());
    }
    if (!j.is_object()) ctx.fail("record is not an object");

    if (!saw_header) {
      if (!j.contains("version")) ctx.fail("expected header record");
      if (field(ctx, j, "version").get<int>() != 1)
        ctx.fail("unsupported log version");
      rank = field(ctx, j, "rank").get<Index>();
      report.seed = json_to_mat(ctx, field(ctx, j, "seed"), rank, "seed");
      const json& options = field(ctx, j, "options");
      report.max_depth = field(ctx, options, "max_depth").get<int>();
      report.options.sieve_depth =
          field(ctx, options, "sieve_depth").get<int>();
      report.options.global_dedup =
          field(ctx, options, "global_dedup").get<bool>();
      report.options.threads = field(ctx, options, "threads").get<unsigned>();
      const json& cap = field(ctx, options, "max_charts_per_node");
      if (!cap.is_null())
        report.options.max_charts_per_node = cap.get<std::int64_t>();
      const json& budget = field(ctx, options, "chart_time_budget_ms");
      if (!budget.is_null())
        report.options.chart_time_budget_ms = budget.get<std::int64_t>();
      saw_header = true;
      continue;
    }

    if (j.contains("summary")) {
      const json& summary = field(ctx, j, "summary");
      report.terminated = field(ctx, summary, "terminated").get<bool>();
      report.truncated = field(ctx, summary, "truncated").get<bool>();
      for (const json& e : field(ctx, summary, "truncations")) {
        TruncationEvent event;
        event.node = field(ctx, e, "node").get<std::int64_t>();
        event.reason = field(ctx, e, "reason").get<std::string>();
        report.truncations.push_back(std::move(event));
      }
      saw_summary = true;
      continue;
    }

    ExplorationNode node;
    node.id = field(ctx, j, "id").get<std::int64_t>();
    if (node.id != static_cast<std::int64_t>(report.nodes.size()))
      ctx.fail("node ids must be sequential");
    const json& parent = field(ctx, j, "parent");
    if (!parent.is_null()) node.parent = parent.get<std::int64_t>();
    node.depth = field(ctx, j, "depth").get<int>();
    const json& base = field(ctx, j, "base");
    if (!base.is_null()) node.base = json_to_indices(ctx, base, "base");
    const json& hb = field(ctx, j, "hb");
    const json& cert = field(ctx, j, "cert");
    if (!hb.is_null()) {
      try {
        node.semigroup.emplace(json_to_mat(ctx, hb, rank, "hb"),
                               json_to_covec(ctx, cert, rank, "cert"));
      } catch (const Error& e) {
        if (dynamic_cast<const ParseError*>(&e)) throw;
        ctx.fail(std::string("invalid semigroup record: ") + e.what());
      }
    }
    const std::string status_text =
        field(ctx, j, "status").get<std::string>();
    const std::optional<NodeStatus> status = parse_status(status_text);
    if (!status) ctx.fail("unknown status '" + status_text + "'");
    node.status = *status;
    if (j.contains("ref")) node.ref = j["ref"].get<std::int64_t>();
    if (j.contains("witness"))
      node.witness = json_to_witness(ctx, j["witness"], rank);
    report.nodes.push_back(std::move(node));
  }

  ++ctx.line;
  if (!saw_header) ctx.fail("empty log: missing header");
  if (!saw_summary) ctx.fail("unexpected end of log: missing summary record");

  for (const ExplorationNode& node : report.nodes)
    if (node.status == NodeStatus::kCycle) {
      if (!node.ref || !node.witness)
        throw ParseError("log parse error: cycle node " +
                         std::to_string(node.id) + " lacks ref or witness");
      report.cycles.push_back({node.id, *node.ref, *node.witness});
    }
  return report;
}

ExplorationReport read_log(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("read_log: cannot open '" + path + "'");
  return read_log(in);
}

}  // namespace nashtoric
