#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "graphlcp/symbol.hpp"

namespace graphlcp {

using NodeId = std::uint32_t;

struct Edge {
  NodeId src = 0;
  NodeId dst = 0;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

struct LabeledEdge {
  NodeId src = 0;
  NodeId dst = 0;
  Symbol label;
  friend constexpr auto operator<=>(const LabeledEdge&, const LabeledEdge&) = default;
};

// Directed graph with one symbol per node. Immutable once constructed; edges
// are kept sorted by (src, dst) with duplicates removed, and both adjacency
// directions are stored in CSR form.
class LabeledGraph {
 public:
  LabeledGraph() = default;

  // Throws InputError if an edge endpoint is out of range or more than one
  // node carries the sentinel.
  LabeledGraph(std::vector<Symbol> labels, std::vector<Edge> edges,
               AlphabetKind alphabet = AlphabetKind::Character);

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  // Number of distinct labels present, sentinel included.
  std::size_t sigma() const noexcept { return sigma_; }
  AlphabetKind alphabet() const noexcept { return alphabet_; }

  Symbol label(NodeId u) const { return labels_[u]; }
  std::span<const Symbol> labels() const noexcept { return labels_; }
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const NodeId> predecessors(NodeId u) const {
    return {in_adj_.data() + in_off_[u], in_adj_.data() + in_off_[u + 1]};
  }
  std::span<const NodeId> successors(NodeId u) const {
    return {out_adj_.data() + out_off_[u], out_adj_.data() + out_off_[u + 1]};
  }
  std::size_t in_degree(NodeId u) const { return in_off_[u + 1] - in_off_[u]; }
  std::size_t out_degree(NodeId u) const { return out_off_[u + 1] - out_off_[u]; }

  std::optional<NodeId> sentinel() const noexcept { return sentinel_; }

  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
    return a.alphabet_ == b.alphabet_ && a.labels_ == b.labels_ && a.edges_ == b.edges_;
  }

 private:
  AlphabetKind alphabet_ = AlphabetKind::Character;
  std::vector<Symbol> labels_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> in_off_{0};
  std::vector<NodeId> in_adj_;
  std::vector<std::size_t> out_off_{0};
  std::vector<NodeId> out_adj_;
  std::size_t sigma_ = 0;
  std::optional<NodeId> sentinel_;
};

// Edge-labeled input; converted with normalize_edge_labeled before indexing.
struct EdgeLabeledGraph {
  std::size_t node_count = 0;
  std::vector<LabeledEdge> edges;
  AlphabetKind alphabet = AlphabetKind::Character;
};

enum class ViolationKind : std::uint8_t { NoIncomingEdge, ReservedLabel, BadId };

std::string_view to_string(ViolationKind kind);

struct Violation {
  NodeId node = 0;
  ViolationKind kind = ViolationKind::NoIncomingEdge;
  friend constexpr bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;

  // "no-incoming-edge: node 0; ..." for error messages.
  std::string describe() const;
};

// Reports every node without an incoming edge, and a sentinel-labeled node
// that is not a pure source with a self-loop.
ValidationReport validate(const LabeledGraph& g);

// Range check on raw edge lists, used before a LabeledGraph exists.
ValidationReport validate_ids(std::size_t node_count, std::span<const Edge> edges);

// Adds node n labeled `$` with a self-loop and an edge to every node of
// in-degree 0. With force, the sentinel is added even when no such node exists.
// Throws InputError if the graph already has a sentinel, or if there is
// nothing to augment and force is false.
LabeledGraph augment_with_sentinel(const LabeledGraph& g, bool force = false);

// One copy (u, c) per node u and distinct incoming symbol c, labeled c; edge
// (v, u, c) becomes edges from every copy of v to (u, c). Copies are numbered
// in (u, c) order. Nodes without incoming edges get a copy labeled
// `source_label` when one is given; otherwise no copy is made, since such a
// copy would only carry the empty walk, and its successors surface as
// in-degree-0 nodes for augment_with_sentinel.
LabeledGraph normalize_edge_labeled(const EdgeLabeledGraph& g,
                                    std::optional<Symbol> source_label = std::nullopt);

// --- text format -----------------------------------------------------------

using GraphFile = std::variant<LabeledGraph, EdgeLabeledGraph>;

// Parses either file flavor; the `format:` header selects edge-labeled mode,
// as does force_edge_labeled. Node ids are renumbered densely in ascending
// order of their declared values.
GraphFile parse_graph_file(std::string_view text, bool force_edge_labeled = false);

// Node-labeled format only.
LabeledGraph parse_graph(std::string_view text);

// Parses and normalizes whatever flavor the text holds.
LabeledGraph load_labeled_graph(std::string_view text, bool force_edge_labeled = false);

// Writes the node-labeled format. A sentinel node (always the last id after
// augmentation) is omitted together with its edges and a comment records that
// the graph was augmented, so the output reparses and re-augments to `g`.
std::string serialize_graph(const LabeledGraph& g);

}  // namespace graphlcp
