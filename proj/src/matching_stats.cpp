#include "graphlcp/matching_stats.hpp"

#include <algorithm>
#include <numeric>

#include "graphlcp/error.hpp"

namespace graphlcp {

MSIndex MSIndex::build(LabeledGraph g) {
  if (g.empty()) throw InputError("nothing to index: graph has no nodes");
  const auto report = validate(g);
  if (!report.ok) throw InputError(report.describe());
  MSIndex x;
  x.order_ = compute_joint_order(g);
  x.lcp_ = build_lcp_arrays(x.order_);
  x.chains_ = compute_width(x.order_);
  x.graph_ = std::move(g);
  x.derive_adjacency();
  return x;
}

MSIndex MSIndex::from_parts(LabeledGraph g, JointColexOrder order, LcpArrays lcp,
                            ChainDecomposition chains) {
  if (g.empty()) throw InputError("nothing to index: graph has no nodes");
  const auto report = validate(g);
  if (!report.ok) throw InputError(report.describe());
  const std::size_t n = g.size();
  if (!std::ranges::equal(order.labels(), g.labels())) {
    throw InputError("order was built for a different graph");
  }
  if (chains.node_count() != n) throw InputError("chains were built for a different graph");
  if (lcp.lcp_min.size() + 1 != n || lcp.lcp_max.size() + 1 != n || lcp.lcp_joint.size() + 1 != 2 * n) {
    throw InputError("lcp arrays have the wrong size for this graph");
  }
  for (NodeId u = 0; u < n; ++u) {
    for (const Side side : {Side::Min, Side::Max}) {
      const NodeId t = order.tail({u, side}).node;
      const auto preds = g.predecessors(u);
      if (!std::binary_search(preds.begin(), preds.end(), t)) {
        throw InputError("order tail link is not a predecessor edge");
      }
    }
  }
  MSIndex x;
  x.graph_ = std::move(g);
  x.order_ = std::move(order);
  x.lcp_ = std::move(lcp);
  x.chains_ = std::move(chains);
  x.derive_adjacency();
  return x;
}

void MSIndex::derive_adjacency() {
  const auto n = static_cast<NodeId>(graph_.size());
  const auto by_label_then_id = [&](NodeId a, NodeId b) {
    return std::pair{graph_.label(a), a} < std::pair{graph_.label(b), b};
  };
  out_off_.assign(n + 1, 0);
  out_by_label_.clear();
  out_by_label_.reserve(graph_.edge_count());
  for (NodeId u = 0; u < n; ++u) {
    const auto succ = graph_.successors(u);
    const auto first = out_by_label_.insert(out_by_label_.end(), succ.begin(), succ.end());
    std::sort(first, out_by_label_.end(), by_label_then_id);
    out_off_[u + 1] = out_by_label_.size();
  }
  by_label_nodes_.resize(n);
  std::iota(by_label_nodes_.begin(), by_label_nodes_.end(), NodeId{0});
  std::sort(by_label_nodes_.begin(), by_label_nodes_.end(), by_label_then_id);
  by_label_symbols_.resize(n);
  for (NodeId k = 0; k < n; ++k) by_label_symbols_[k] = graph_.label(by_label_nodes_[k]);
}

std::span<const NodeId> MSIndex::successors_labeled(NodeId u, Symbol c) const {
  const auto first = out_by_label_.begin() + static_cast<std::ptrdiff_t>(out_off_[u]);
  const auto last = out_by_label_.begin() + static_cast<std::ptrdiff_t>(out_off_[u + 1]);
  const auto lo = std::partition_point(first, last, [&](NodeId v) { return graph_.label(v) < c; });
  const auto hi = std::partition_point(lo, last, [&](NodeId v) { return graph_.label(v) == c; });
  return {lo, hi};
}

std::span<const NodeId> MSIndex::nodes_labeled(Symbol c) const {
  const auto [lo, hi] = std::equal_range(by_label_symbols_.begin(), by_label_symbols_.end(), c);
  const auto base = by_label_nodes_.data();
  return {base + (lo - by_label_symbols_.begin()), base + (hi - by_label_symbols_.begin())};
}

// --- OccurrenceSet ----------------------------------------------------------

OccurrenceSet OccurrenceSet::all(const ChainDecomposition& chains) {
  OccurrenceSet s(chains.width());
  for (std::size_t c = 0; c < chains.width(); ++c) {
    s.segments_[c] = Segment{0, static_cast<std::uint32_t>(chains.chain(c).size() - 1)};
  }
  return s;
}

OccurrenceSet OccurrenceSet::from_nodes(const ChainDecomposition& chains, const NodeSet& nodes) {
  OccurrenceSet s(chains.width());
  nodes.for_each([&](std::size_t u) {
    const auto at = chains.locate(static_cast<NodeId>(u));
    auto& seg = s.segments_[at.chain];
    if (!seg) {
      seg = Segment{at.pos, at.pos};
    } else {
      seg->lo = std::min(seg->lo, at.pos);
      seg->hi = std::max(seg->hi, at.pos);
    }
  });
  // every member lies inside its chain's hull, so equal sizes mean the hulls
  // contain no outsiders
  if (s.node_count() != nodes.count()) {
    throw InternalError("occurrence set is not contiguous within its chains");
  }
  return s;
}

bool OccurrenceSet::empty() const noexcept {
  return std::none_of(segments_.begin(), segments_.end(), [](const auto& s) { return s.has_value(); });
}

std::size_t OccurrenceSet::segment_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(segments_.begin(), segments_.end(), [](const auto& s) { return s.has_value(); }));
}

std::size_t OccurrenceSet::node_count() const noexcept {
  std::size_t total = 0;
  for (const auto& s : segments_) {
    if (s) total += s->length();
  }
  return total;
}

std::vector<NodeId> OccurrenceSet::nodes(const ChainDecomposition& chains) const {
  std::vector<NodeId> out;
  for_each_node(chains, [&](NodeId u) { out.push_back(u); });
  std::sort(out.begin(), out.end());
  return out;
}

// --- queries ----------------------------------------------------------------

OccurrenceSet occurrence_step(const MSIndex& x, const OccurrenceSet& s, Symbol c) {
  NodeSet next(x.graph().size());
  s.for_each_node(x.chains(), [&](NodeId u) {
    for (const NodeId v : x.successors_labeled(u, c)) next.insert(v);
  });
  return OccurrenceSet::from_nodes(x.chains(), next);
}

namespace {

OccurrenceSet seed(const MSIndex& x, Symbol c) {
  NodeSet nodes(x.graph().size());
  for (const NodeId u : x.nodes_labeled(c)) nodes.insert(u);
  return OccurrenceSet::from_nodes(x.chains(), nodes);
}

}  // namespace

MSResult matching_statistics(const MSIndex& x, std::span<const Symbol> pattern,
                             const SweepObserver& observer) {
  const std::size_t m = pattern.size();
  MSResult result;
  result.values.assign(m, 0);

  std::size_t j = 0;
  OccurrenceSet window = OccurrenceSet::all(x.chains());
  for (std::size_t i = 0; i < m; ++i) {
    if (j == m) {
      // w[i-1..m) occurs, hence so does every suffix of it
      result.values[i] = static_cast<std::uint32_t>(m - i);
      continue;
    }
    if (j <= i) {
      j = i;
      window = OccurrenceSet::all(x.chains());
    } else {
      // contraction: rebuild the set of w[i..j)
      window = seed(x, pattern[i]);
      for (std::size_t k = i + 1; k < j; ++k) window = occurrence_step(x, window, pattern[k]);
      if (window.empty()) throw InternalError("suffix of an occurring window does not occur");
    }
    if (observer) observer(i, j, window);
    while (j < m) {
      auto extended = j == i ? seed(x, pattern[j]) : occurrence_step(x, window, pattern[j]);
      if (extended.empty()) break;
      window = std::move(extended);
      ++j;
      if (observer) observer(i, j, window);
    }
    result.values[i] = static_cast<std::uint32_t>(j - i);
  }
  return result;
}

MSResult ms_oracle(const LabeledGraph& g, std::span<const Symbol> pattern) {
  const std::size_t m = pattern.size();
  MSResult result;
  result.values.assign(m, 0);
  std::vector<NodeId> current;
  std::vector<NodeId> next;
  std::vector<char> mark(g.size(), 0);
  for (std::size_t i = 0; i < m; ++i) {
    current.clear();
    for (NodeId u = 0; u < g.size(); ++u) {
      if (g.label(u) == pattern[i]) current.push_back(u);
    }
    std::size_t l = current.empty() ? 0 : 1;
    while (!current.empty() && i + l < m) {
      next.clear();
      for (const NodeId u : current) {
        for (const NodeId v : g.successors(u)) {
          if (g.label(v) == pattern[i + l] && !mark[v]) {
            mark[v] = 1;
            next.push_back(v);
          }
        }
      }
      for (const NodeId v : next) mark[v] = 0;
      if (next.empty()) break;
      current.swap(next);
      ++l;
    }
    result.values[i] = static_cast<std::uint32_t>(l);
  }
  return result;
}

bool occurs(const MSIndex& x, std::span<const Symbol> q) {
  OccurrenceSet s = OccurrenceSet::all(x.chains());
  for (const Symbol c : q) {
    s = occurrence_step(x, s, c);
    if (s.empty()) return false;
  }
  return true;
}

}  // namespace graphlcp
