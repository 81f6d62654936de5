#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "graphlcp/chain_width.hpp"
#include "graphlcp/colex_order.hpp"
#include "graphlcp/graph.hpp"
#include "graphlcp/lcp.hpp"
#include "graphlcp/node_set.hpp"

namespace graphlcp {

// Everything needed to answer queries against one graph. Immutable after
// construction and safe to share between threads.
class MSIndex {
 public:
  // Throws InputError for an empty graph or one that fails validate().
  static MSIndex build(LabeledGraph g);

  // Reassembles an index from stored components (see index_document.hpp).
  // Throws InputError if the components do not describe the same graph.
  static MSIndex from_parts(LabeledGraph g, JointColexOrder order, LcpArrays lcp,
                            ChainDecomposition chains);

  const LabeledGraph& graph() const noexcept { return graph_; }
  const JointColexOrder& order() const noexcept { return order_; }
  const LcpArrays& lcp() const noexcept { return lcp_; }
  const ChainDecomposition& chains() const noexcept { return chains_; }
  std::size_t width() const noexcept { return chains_.width(); }

  // Out-neighbors of u labeled c, ascending by id.
  std::span<const NodeId> successors_labeled(NodeId u, Symbol c) const;
  // All nodes labeled c, ascending by id.
  std::span<const NodeId> nodes_labeled(Symbol c) const;

 private:
  void derive_adjacency();

  LabeledGraph graph_;
  JointColexOrder order_;
  LcpArrays lcp_;
  ChainDecomposition chains_;

  std::vector<std::size_t> out_off_;
  std::vector<NodeId> out_by_label_;  // per node, sorted by (label, id)
  std::vector<Symbol> by_label_symbols_;
  std::vector<NodeId> by_label_nodes_;  // all nodes sorted by (label, id)
};

// Inclusive range of positions within one chain.
struct Segment {
  std::uint32_t lo = 0;
  std::uint32_t hi = 0;
  std::size_t length() const noexcept { return std::size_t{hi} - lo + 1; }
  friend constexpr bool operator==(const Segment&, const Segment&) = default;
};

// A node set stored as at most one contiguous segment per chain.
class OccurrenceSet {
 public:
  OccurrenceSet() = default;
  explicit OccurrenceSet(std::size_t chain_count) : segments_(chain_count) {}

  // The occurrence set of the empty string: every node.
  static OccurrenceSet all(const ChainDecomposition& chains);

  // Segments covering exactly `nodes`. Throws InternalError if some chain
  // meets `nodes` in a non-contiguous range.
  static OccurrenceSet from_nodes(const ChainDecomposition& chains, const NodeSet& nodes);

  bool empty() const noexcept;
  std::size_t segment_count() const noexcept;
  std::size_t node_count() const noexcept;
  std::span<const std::optional<Segment>> segments() const noexcept { return segments_; }

  template <typename Fn>
  void for_each_node(const ChainDecomposition& chains, Fn&& fn) const {
    for (std::size_t c = 0; c < segments_.size(); ++c) {
      if (!segments_[c]) continue;
      const auto chain = chains.chain(c);
      for (std::uint32_t p = segments_[c]->lo; p <= segments_[c]->hi; ++p) fn(chain[p]);
    }
  }

  // Ascending node ids.
  std::vector<NodeId> nodes(const ChainDecomposition& chains) const;

  friend bool operator==(const OccurrenceSet&, const OccurrenceSet&) = default;

 private:
  std::vector<std::optional<Segment>> segments_;
};

// Occurrence set of y·c given that of y: nodes labeled c with an in-neighbor
// in `s`, regrouped into per-chain segments.
OccurrenceSet occurrence_step(const MSIndex& x, const OccurrenceSet& s, Symbol c);

struct MSResult {
  std::vector<std::uint32_t> values;
  friend bool operator==(const MSResult&, const MSResult&) = default;
};

// Called with each window w[i..j) the sweep settles on, and its occurrence set.
using SweepObserver = std::function<void(std::size_t begin, std::size_t end, const OccurrenceSet&)>;

// values[i] is the length of the longest prefix of w[i..] spelled by some
// directed walk. Two-pointer sweep: extend the window right while the
// occurrence set stays nonempty, then drop the first symbol and rebuild the
// set of the shorter window by forward simulation.
MSResult matching_statistics(const MSIndex& x, std::span<const Symbol> pattern,
                             const SweepObserver& observer = {});

// Independent reference: per start position, forward simulation over plain
// node lists. O(m^2 e).
MSResult ms_oracle(const LabeledGraph& g, std::span<const Symbol> pattern);

// True iff some walk spells q; the empty pattern always occurs.
bool occurs(const MSIndex& x, std::span<const Symbol> q);

}  // namespace graphlcp
