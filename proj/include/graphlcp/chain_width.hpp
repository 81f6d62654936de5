#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "graphlcp/colex_order.hpp"

namespace graphlcp {

// Relation between two nodes under the interval order on [min_u, max_u].
enum class NodeRelation : std::uint8_t { Less, Greater, Incomparable, Equivalent };

std::string_view to_string(NodeRelation r);

// Less iff max_u < min_v; Equivalent iff all four strings coincide.
NodeRelation node_compare(const JointColexOrder& o, NodeId u, NodeId v);

// Strict order used for chains: Less, or Equivalent with the smaller id first.
bool node_precedes(const JointColexOrder& o, NodeId u, NodeId v);

struct ChainPosition {
  std::uint32_t chain = 0;
  std::uint32_t pos = 0;
};

// Partition of the nodes into p chains of the strict node order, together
// with an antichain of size p certifying that p is minimal.
class ChainDecomposition {
 public:
  ChainDecomposition() = default;

  // Rebuilds from stored chains and antichain. Checks that chains partition
  // 0..node_count-1 and that sizes agree; order validity is the caller's job.
  static ChainDecomposition from_parts(std::size_t node_count, std::vector<std::vector<NodeId>> chains,
                                       std::vector<NodeId> antichain);

  std::size_t width() const noexcept { return chains_.size(); }
  std::size_t node_count() const noexcept { return locate_.size(); }
  std::span<const std::vector<NodeId>> chains() const noexcept { return chains_; }
  std::span<const NodeId> chain(std::size_t c) const { return chains_[c]; }
  ChainPosition locate(NodeId u) const { return locate_[u]; }
  std::span<const NodeId> antichain() const noexcept { return antichain_; }

  friend bool operator==(const ChainDecomposition& a, const ChainDecomposition& b) {
    return a.chains_ == b.chains_ && a.antichain_ == b.antichain_;
  }

 private:
  friend ChainDecomposition compute_width(const JointColexOrder& o);

  void index_positions();

  std::vector<std::vector<NodeId>> chains_;
  std::vector<ChainPosition> locate_;
  std::vector<NodeId> antichain_;
};

// Minimum chain cover by Dilworth's theorem: maximum bipartite matching on the
// (transitive) strict order, one chain per unmatched node, and a maximum
// antichain read off the Konig vertex cover.
//
// Throws InternalError if the relation from node_compare is not transitive.
ChainDecomposition compute_width(const JointColexOrder& o);

}  // namespace graphlcp
