#include "graphlcp/chain_width.hpp"

#include <algorithm>

#include "graphlcp/error.hpp"
#include "graphlcp/node_set.hpp"

namespace graphlcp {

std::string_view to_string(NodeRelation r) {
  switch (r) {
    case NodeRelation::Less:
      return "LT";
    case NodeRelation::Greater:
      return "GT";
    case NodeRelation::Incomparable:
      return "INCOMPARABLE";
    case NodeRelation::Equivalent:
      return "EQUIVALENT";
  }
  return "?";
}

NodeRelation node_compare(const JointColexOrder& o, NodeId u, NodeId v) {
  const auto u_min = o.rank({u, Side::Min});
  const auto u_max = o.rank({u, Side::Max});
  const auto v_min = o.rank({v, Side::Min});
  const auto v_max = o.rank({v, Side::Max});
  if (u_max < v_min) return NodeRelation::Less;
  if (v_max < u_min) return NodeRelation::Greater;
  if (u_min == u_max && v_min == v_max && u_min == v_min) return NodeRelation::Equivalent;
  return NodeRelation::Incomparable;
}

bool node_precedes(const JointColexOrder& o, NodeId u, NodeId v) {
  switch (node_compare(o, u, v)) {
    case NodeRelation::Less:
      return true;
    case NodeRelation::Equivalent:
      return u < v;
    default:
      return false;
  }
}

void ChainDecomposition::index_positions() {
  for (std::uint32_t c = 0; c < chains_.size(); ++c) {
    for (std::uint32_t p = 0; p < chains_[c].size(); ++p) locate_[chains_[c][p]] = {c, p};
  }
}

ChainDecomposition ChainDecomposition::from_parts(std::size_t node_count,
                                                  std::vector<std::vector<NodeId>> chains,
                                                  std::vector<NodeId> antichain) {
  ChainDecomposition d;
  d.chains_ = std::move(chains);
  d.antichain_ = std::move(antichain);
  d.locate_.assign(node_count, {});
  std::vector<char> seen(node_count, 0);
  std::size_t total = 0;
  for (const auto& chain : d.chains_) {
    if (chain.empty()) throw InputError("empty chain");
    for (const NodeId u : chain) {
      if (u >= node_count || seen[u]) throw InputError("chains do not partition the nodes");
      seen[u] = 1;
      ++total;
    }
  }
  if (total != node_count) throw InputError("chains do not cover every node");
  if (d.antichain_.size() != d.chains_.size()) throw InputError("antichain size differs from width");
  for (const NodeId u : d.antichain_) {
    if (u >= node_count) throw InputError("antichain node out of range");
  }
  d.index_positions();
  return d;
}

namespace {

// Kuhn's augmenting paths. match_right[v] is the left node matched to v.
class BipartiteMatcher {
 public:
  explicit BipartiteMatcher(const std::vector<std::vector<NodeId>>& adj)
      : adj_(adj), match_left_(adj.size(), kNone), match_right_(adj.size(), kNone), stamp_(adj.size(), 0) {}

  static constexpr NodeId kNone = UINT32_MAX;

  std::size_t run() {
    std::size_t size = 0;
    // greedy warm start
    for (NodeId u = 0; u < adj_.size(); ++u) {
      for (const NodeId v : adj_[u]) {
        if (match_right_[v] == kNone) {
          match_left_[u] = v;
          match_right_[v] = u;
          ++size;
          break;
        }
      }
    }
    for (NodeId u = 0; u < adj_.size(); ++u) {
      if (match_left_[u] != kNone) continue;
      ++epoch_;
      if (augment(u)) ++size;
    }
    return size;
  }

  const std::vector<NodeId>& match_left() const { return match_left_; }
  const std::vector<NodeId>& match_right() const { return match_right_; }

 private:
  bool augment(NodeId u) {
    for (const NodeId v : adj_[u]) {
      if (stamp_[v] == epoch_) continue;
      stamp_[v] = epoch_;
      if (match_right_[v] == kNone || augment(match_right_[v])) {
        match_left_[u] = v;
        match_right_[v] = u;
        return true;
      }
    }
    return false;
  }

  const std::vector<std::vector<NodeId>>& adj_;
  std::vector<NodeId> match_left_;
  std::vector<NodeId> match_right_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
};

}  // namespace

ChainDecomposition compute_width(const JointColexOrder& o) {
  const auto n = static_cast<NodeId>(o.node_count());

  std::vector<NodeSet> above(n, NodeSet(n));
  std::vector<std::vector<NodeId>> adj(n);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = 0; v < n; ++v) {
      if (u != v && node_precedes(o, u, v)) {
        above[u].insert(v);
        adj[u].push_back(v);
      }
    }
  }
  // u < v must imply above(v) ⊆ above(u)
  for (NodeId u = 0; u < n; ++u) {
    for (const NodeId v : adj[u]) {
      if (!above[v].subset_of(above[u])) {
        throw InternalError("node order is not transitive at (" + std::to_string(u) + ", " +
                            std::to_string(v) + ")");
      }
    }
  }

  BipartiteMatcher matcher(adj);
  const std::size_t matched = matcher.run();
  const auto& next = matcher.match_left();
  const auto& prev = matcher.match_right();

  ChainDecomposition d;
  d.locate_.assign(n, {});
  for (NodeId u = 0; u < n; ++u) {
    if (prev[u] != BipartiteMatcher::kNone) continue;
    std::vector<NodeId> chain;
    for (NodeId x = u; x != BipartiteMatcher::kNone; x = next[x]) chain.push_back(x);
    d.chains_.push_back(std::move(chain));
  }
  if (d.chains_.size() != n - matched) throw InternalError("chain count differs from n - |matching|");
  d.index_positions();

  // Konig: Z = nodes reachable by alternating paths from unmatched left
  // vertices. Cover = (L \ Z) ∪ (R ∩ Z); the antichain is every x with
  // x_L ∈ Z and x_R ∉ Z.
  std::vector<char> left_z(n, 0), right_z(n, 0);
  std::vector<NodeId> queue;
  for (NodeId u = 0; u < n; ++u) {
    if (next[u] == BipartiteMatcher::kNone) {
      left_z[u] = 1;
      queue.push_back(u);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId u = queue[head];
    for (const NodeId v : adj[u]) {
      if (right_z[v]) continue;
      right_z[v] = 1;
      const NodeId w = prev[v];
      if (w != BipartiteMatcher::kNone && !left_z[w]) {
        left_z[w] = 1;
        queue.push_back(w);
      }
    }
  }
  for (NodeId x = 0; x < n; ++x) {
    if (left_z[x] && !right_z[x]) d.antichain_.push_back(x);
  }
  if (d.antichain_.size() != d.chains_.size()) {
    throw InternalError("antichain certificate size differs from chain count");
  }
  return d;
}

}  // namespace graphlcp
