#include "graphlcp/graph.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "graphlcp/error.hpp"

namespace graphlcp {
namespace {

void build_csr(std::size_t n, std::span<const Edge> edges, bool by_dst,
               std::vector<std::size_t>& off, std::vector<NodeId>& adj) {
  off.assign(n + 1, 0);
  for (const auto& e : edges) ++off[(by_dst ? e.dst : e.src) + 1];
  for (std::size_t i = 0; i < n; ++i) off[i + 1] += off[i];
  adj.assign(edges.size(), 0);
  auto cursor = off;
  // edges are sorted by (src, dst), so both directions come out sorted by id
  for (const auto& e : edges) {
    const NodeId key = by_dst ? e.dst : e.src;
    adj[cursor[key]++] = by_dst ? e.src : e.dst;
  }
}

}  // namespace

LabeledGraph::LabeledGraph(std::vector<Symbol> labels, std::vector<Edge> edges,
                           AlphabetKind alphabet)
    : alphabet_(alphabet), labels_(std::move(labels)), edges_(std::move(edges)) {
  const auto ids = validate_ids(labels_.size(), edges_);
  if (!ids.ok) throw InputError("edge endpoint out of range: " + ids.describe());

  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  build_csr(labels_.size(), edges_, /*by_dst=*/true, in_off_, in_adj_);
  build_csr(labels_.size(), edges_, /*by_dst=*/false, out_off_, out_adj_);

  std::vector<Symbol> distinct(labels_);
  std::sort(distinct.begin(), distinct.end());
  sigma_ = static_cast<std::size_t>(std::unique(distinct.begin(), distinct.end()) - distinct.begin());

  for (NodeId u = 0; u < labels_.size(); ++u) {
    if (!labels_[u].is_sentinel()) continue;
    if (sentinel_) throw InputError("more than one node carries the sentinel label");
    sentinel_ = u;
  }
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::NoIncomingEdge:
      return "no-incoming-edge";
    case ViolationKind::ReservedLabel:
      return "reserved-label";
    case ViolationKind::BadId:
      return "bad-id";
  }
  return "unknown";
}

std::string ValidationReport::describe() const {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += std::string(to_string(v.kind)) + ": node " + std::to_string(v.node);
  }
  return out;
}

ValidationReport validate_ids(std::size_t node_count, std::span<const Edge> edges) {
  ValidationReport report;
  for (const auto& e : edges) {
    if (e.src >= node_count) report.violations.push_back({e.src, ViolationKind::BadId});
    if (e.dst >= node_count) report.violations.push_back({e.dst, ViolationKind::BadId});
  }
  report.ok = report.violations.empty();
  return report;
}

ValidationReport validate(const LabeledGraph& g) {
  ValidationReport report;
  for (NodeId u = 0; u < g.size(); ++u) {
    if (g.in_degree(u) == 0) report.violations.push_back({u, ViolationKind::NoIncomingEdge});
    if (g.label(u).is_sentinel()) {
      const auto preds = g.predecessors(u);
      const bool pure_source = preds.size() == 1 && preds.front() == u;
      if (!pure_source) report.violations.push_back({u, ViolationKind::ReservedLabel});
    }
  }
  report.ok = report.violations.empty();
  return report;
}

LabeledGraph augment_with_sentinel(const LabeledGraph& g, bool force) {
  if (g.sentinel()) throw InputError("graph already has a sentinel node");
  const auto s = static_cast<NodeId>(g.size());
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  edges.push_back({s, s});
  bool any = false;
  for (NodeId u = 0; u < g.size(); ++u) {
    if (g.in_degree(u) == 0) {
      edges.push_back({s, u});
      any = true;
    }
  }
  if (!any && !force) throw InputError("every node already has an incoming edge");
  std::vector<Symbol> labels(g.labels().begin(), g.labels().end());
  labels.push_back(Symbol::sentinel());
  return LabeledGraph(std::move(labels), std::move(edges), g.alphabet());
}

LabeledGraph normalize_edge_labeled(const EdgeLabeledGraph& g, std::optional<Symbol> source_label) {
  for (const auto& e : g.edges) {
    if (e.src >= g.node_count || e.dst >= g.node_count) {
      throw InputError("edge endpoint out of range");
    }
  }
  // incoming symbols per node; std::set keeps copies in (u, c) order
  std::vector<std::set<Symbol>> incoming(g.node_count);
  for (const auto& e : g.edges) incoming[e.dst].insert(e.label);

  std::map<std::pair<NodeId, Symbol>, NodeId> copy_id;
  std::vector<std::vector<NodeId>> copies_of(g.node_count);
  std::vector<Symbol> labels;
  for (NodeId u = 0; u < g.node_count; ++u) {
    if (incoming[u].empty()) {
      if (!source_label) continue;
      copies_of[u].push_back(static_cast<NodeId>(labels.size()));
      labels.push_back(*source_label);
      continue;
    }
    for (const Symbol c : incoming[u]) {
      const auto id = static_cast<NodeId>(labels.size());
      copy_id[{u, c}] = id;
      copies_of[u].push_back(id);
      labels.push_back(c);
    }
  }

  std::vector<Edge> edges;
  for (const auto& e : g.edges) {
    const NodeId target = copy_id.at({e.dst, e.label});
    for (const NodeId from : copies_of[e.src]) edges.push_back({from, target});
  }
  return LabeledGraph(std::move(labels), std::move(edges), g.alphabet);
}

}  // namespace graphlcp
