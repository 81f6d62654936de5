#include "graphlcp/colex_order.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "graphlcp/error.hpp"

namespace graphlcp {

std::string_view to_string(Side side) { return side == Side::Min ? "MIN" : "MAX"; }

std::size_t JointColexOrder::checked(Item i) const {
  if (i.node >= labels_.size()) {
    throw InputError("item node " + std::to_string(i.node) + " is outside this order (n=" +
                     std::to_string(labels_.size()) + ")");
  }
  return i.index();
}

void JointColexOrder::finish() {
  const std::size_t m = ranks_.size();
  std::vector<std::uint32_t> idx(m);
  std::iota(idx.begin(), idx.end(), 0U);
  // item index order already encodes (node id, Min before Max)
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return ranks_[a] < ranks_[b]; });
  sorted_.resize(m);
  positions_.resize(m);
  for (std::size_t p = 0; p < m; ++p) {
    sorted_[p] = Item::from_index(idx[p]);
    positions_[idx[p]] = static_cast<std::uint32_t>(p);
  }
  class_count_ = m == 0 ? 0 : ranks_[idx.back()] + std::size_t{1};
}

JointColexOrder JointColexOrder::from_parts(std::vector<Symbol> labels,
                                            std::vector<std::uint32_t> ranks,
                                            std::vector<std::uint32_t> tails, std::size_t rounds) {
  const std::size_t m = 2 * labels.size();
  if (ranks.size() != m || tails.size() != m) throw InputError("order arrays have the wrong size");
  for (std::size_t i = 0; i < m; ++i) {
    if (ranks[i] >= m || tails[i] >= m || tails[i] % 2 != i % 2) {
      throw InputError("order arrays are inconsistent");
    }
  }
  JointColexOrder o;
  o.labels_ = std::move(labels);
  o.ranks_ = std::move(ranks);
  o.tails_ = std::move(tails);
  o.rounds_ = rounds;
  o.finish();
  // dense ranks, and rank order must agree with label order
  for (std::size_t p = 1; p < m; ++p) {
    const Item a = o.sorted_[p - 1];
    const Item b = o.sorted_[p];
    const auto ra = o.ranks_[a.index()];
    const auto rb = o.ranks_[b.index()];
    if (rb - ra > 1 || o.label(a) > o.label(b) || (ra == rb && o.label(a) != o.label(b))) {
      throw InputError("order ranks are inconsistent with labels");
    }
  }
  return o;
}

JointColexOrder compute_joint_order(const LabeledGraph& g, RefinementTrace* trace) {
  const std::size_t n = g.size();
  const std::size_t m = 2 * n;
  for (NodeId u = 0; u < n; ++u) {
    if (g.in_degree(u) == 0) {
      throw InputError("no-incoming-edge: node " + std::to_string(u));
    }
  }

  std::vector<Symbol> distinct(g.labels().begin(), g.labels().end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<std::uint32_t> label_rank(n);
  for (NodeId u = 0; u < n; ++u) {
    label_rank[u] = static_cast<std::uint32_t>(
        std::lower_bound(distinct.begin(), distinct.end(), g.label(u)) - distinct.begin());
  }

  std::vector<std::uint32_t> rank(m);
  for (std::size_t i = 0; i < m; ++i) rank[i] = label_rank[i / 2];

  std::vector<std::uint32_t> best(m);
  std::vector<std::uint32_t> idx(m);
  std::vector<std::uint32_t> next(m);
  std::size_t rounds = 0;
  if (trace) trace->rounds.assign(1, rank);
  for (;;) {
    for (NodeId u = 0; u < n; ++u) {
      std::uint32_t lo = UINT32_MAX;
      std::uint32_t hi = 0;
      for (const NodeId v : g.predecessors(u)) {
        lo = std::min(lo, rank[2 * v]);
        hi = std::max(hi, rank[2 * v + 1]);
      }
      best[2 * u] = lo;
      best[2 * u + 1] = hi;
    }
    std::iota(idx.begin(), idx.end(), 0U);
    const auto key = [&](std::uint32_t i) { return std::pair{label_rank[i / 2], best[i]}; };
    std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) { return key(a) < key(b); });
    std::uint32_t r = 0;
    for (std::size_t p = 0; p < m; ++p) {
      if (p > 0 && key(idx[p - 1]) != key(idx[p])) ++r;
      next[idx[p]] = r;
    }
    ++rounds;
    if (trace) trace->rounds.push_back(next);
    if (next == rank) break;
    rank.swap(next);
    if (rounds > m + 1) throw InternalError("rank refinement failed to converge");
  }

  JointColexOrder o;
  o.labels_.assign(g.labels().begin(), g.labels().end());
  o.ranks_ = std::move(rank);
  o.rounds_ = rounds;
  o.tails_.resize(m);
  for (NodeId u = 0; u < n; ++u) {
    const auto preds = g.predecessors(u);  // ascending ids
    NodeId lo = preds.front();
    NodeId hi = preds.front();
    for (const NodeId v : preds) {
      if (o.ranks_[2 * v] < o.ranks_[2 * lo]) lo = v;
      if (o.ranks_[2 * v + 1] > o.ranks_[2 * hi + 1]) hi = v;
    }
    o.tails_[2 * u] = 2 * lo;
    o.tails_[2 * u + 1] = 2 * hi + 1;
  }
  o.finish();
  return o;
}

std::strong_ordering compare_items(const JointColexOrder& o, Item a, Item b) {
  return o.rank(a) <=> o.rank(b);
}

std::vector<Symbol> item_prefix(const JointColexOrder& o, Item i, std::size_t length) {
  std::vector<Symbol> out;
  out.reserve(length);
  for (std::size_t k = 0; k < length; ++k) {
    out.push_back(o.label(i));
    i = o.tail(i);
  }
  return out;
}

namespace {

template <typename Better>
std::vector<Symbol> greedy_prefix(const LabeledGraph& g, NodeId u, std::size_t length, Better better) {
  if (u >= g.size()) throw InputError("node " + std::to_string(u) + " out of range");
  std::vector<Symbol> out;
  if (length == 0) return out;
  out.reserve(length);
  out.push_back(g.label(u));
  std::vector<char> in_frontier(g.size(), 0);
  std::vector<NodeId> frontier{u};
  std::vector<NodeId> candidates;
  while (out.size() < length) {
    candidates.clear();
    for (const NodeId v : frontier) {
      for (const NodeId w : g.predecessors(v)) candidates.push_back(w);
    }
    if (candidates.empty()) {
      throw InputError("backward walk from node " + std::to_string(u) + " dies out");
    }
    Symbol c = g.label(candidates.front());
    for (const NodeId w : candidates) {
      if (better(g.label(w), c)) c = g.label(w);
    }
    for (const NodeId v : frontier) in_frontier[v] = 0;
    frontier.clear();
    for (const NodeId w : candidates) {
      if (g.label(w) == c && !in_frontier[w]) {
        in_frontier[w] = 1;
        frontier.push_back(w);
      }
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::vector<Symbol> min_prefix_oracle(const LabeledGraph& g, NodeId u, std::size_t length) {
  return greedy_prefix(g, u, length, [](Symbol a, Symbol b) { return a < b; });
}

std::vector<Symbol> max_prefix_oracle(const LabeledGraph& g, NodeId u, std::size_t length) {
  return greedy_prefix(g, u, length, [](Symbol a, Symbol b) { return a > b; });
}

std::vector<Symbol> prefix_oracle(const LabeledGraph& g, Item i, std::size_t length) {
  return i.side == Side::Min ? min_prefix_oracle(g, i.node, length)
                             : max_prefix_oracle(g, i.node, length);
}

}  // namespace graphlcp
