#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "graphlcp/graph.hpp"

namespace graphlcp {

// Which infinite string of a node an item stands for: the smallest (Min) or
// largest (Max) string read by walking backward from the node.
enum class Side : std::uint8_t { Min = 0, Max = 1 };

std::string_view to_string(Side side);

struct Item {
  NodeId node = 0;
  Side side = Side::Min;

  std::size_t index() const noexcept { return 2 * std::size_t{node} + static_cast<std::size_t>(side); }
  static Item from_index(std::size_t i) noexcept {
    return Item{static_cast<NodeId>(i / 2), static_cast<Side>(i % 2)};
  }

  friend constexpr auto operator<=>(const Item&, const Item&) = default;
};

// Rank vectors (by item index) of every refinement round, round 0 first.
struct RefinementTrace {
  std::vector<std::vector<std::uint32_t>> rounds;
};

// Joint order of the 2n strings {min_u, max_u}. Ranks are dense: equal rank
// means identical infinite strings, and rank order is string order. The
// sorted sequence breaks ties by (node id, Min before Max).
class JointColexOrder {
 public:
  JointColexOrder() = default;

  // Assembles an order from stored parts (index loading). Checks shapes and
  // rank/label consistency; throws InputError on mismatch.
  static JointColexOrder from_parts(std::vector<Symbol> labels, std::vector<std::uint32_t> ranks,
                                    std::vector<std::uint32_t> tails, std::size_t rounds);

  std::size_t node_count() const noexcept { return labels_.size(); }
  std::size_t item_count() const noexcept { return ranks_.size(); }
  std::size_t class_count() const noexcept { return class_count_; }
  std::size_t rounds() const noexcept { return rounds_; }

  std::uint32_t rank(Item i) const { return ranks_[checked(i)]; }
  std::uint32_t class_of(Item i) const { return rank(i); }
  Item tail(Item i) const { return Item::from_index(tails_[checked(i)]); }
  Symbol label(Item i) const { return labels_[i.node]; }

  std::span<const Item> sorted() const noexcept { return sorted_; }
  // 0-based position of the item in sorted().
  std::size_t position(Item i) const { return positions_[checked(i)]; }

  std::span<const std::uint32_t> ranks() const noexcept { return ranks_; }
  std::span<const std::uint32_t> tails() const noexcept { return tails_; }
  std::span<const Symbol> labels() const noexcept { return labels_; }

  friend bool operator==(const JointColexOrder& a, const JointColexOrder& b) {
    return a.labels_ == b.labels_ && a.ranks_ == b.ranks_ && a.tails_ == b.tails_ &&
           a.rounds_ == b.rounds_;
  }

 private:
  friend JointColexOrder compute_joint_order(const LabeledGraph& g, RefinementTrace* trace);

  std::size_t checked(Item i) const;
  void finish();

  std::vector<Symbol> labels_;
  std::vector<std::uint32_t> ranks_;   // by item index
  std::vector<std::uint32_t> tails_;   // by item index, item index of the tail
  std::vector<Item> sorted_;
  std::vector<std::uint32_t> positions_;
  std::size_t class_count_ = 0;
  std::size_t rounds_ = 0;
};

// Fixpoint rank refinement. Round 0 ranks items by label; each further round
// ranks by (label, best predecessor rank), best being the minimum over
// predecessors' Min items for Min items and the maximum over their Max items
// for Max items. Stops when the ranks repeat.
//
// Throws InputError if a node has no predecessor.
JointColexOrder compute_joint_order(const LabeledGraph& g, RefinementTrace* trace = nullptr);

// Throws InputError for items outside the order's graph.
std::strong_ordering compare_items(const JointColexOrder& o, Item a, Item b);

// First `length` symbols of the item's string, read by following tail links.
std::vector<Symbol> item_prefix(const JointColexOrder& o, Item i, std::size_t length);

// Definition-level oracles: greedy backward frontier expansion, no order
// structures involved. Throw InputError on a bad node or an empty frontier.
std::vector<Symbol> min_prefix_oracle(const LabeledGraph& g, NodeId u, std::size_t length);
std::vector<Symbol> max_prefix_oracle(const LabeledGraph& g, NodeId u, std::size_t length);
std::vector<Symbol> prefix_oracle(const LabeledGraph& g, Item i, std::size_t length);

}  // namespace graphlcp
