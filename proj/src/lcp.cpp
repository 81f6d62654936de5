#include "graphlcp/lcp.hpp"

#include <algorithm>

#include "graphlcp/error.hpp"

namespace graphlcp {
namespace {

std::uint64_t pair_key(Item a, Item b) {
  auto x = static_cast<std::uint64_t>(a.index());
  auto y = static_cast<std::uint64_t>(b.index());
  if (x > y) std::swap(x, y);
  return (x << 32) | y;
}

constexpr std::uint32_t kOnPath = LcpValue::kInfiniteRaw - 1;

}  // namespace

LcpValue PairLcp::operator()(Item a, Item b) {
  const JointColexOrder& o = *order_;
  if (o.class_of(a) == o.class_of(b)) return LcpValue::infinite();

  // Walk until labels differ or a memoized pair is reached. Pairs on the
  // current walk hold kOnPath, so stepping onto one again is a cycle.
  path_.clear();
  std::uint32_t end_value = 0;  // lcp of the pair just past the walk
  bool labels_differ = false;
  for (;;) {
    if (o.class_of(a) == o.class_of(b)) {
      throw InternalError("lcp walk reached equal strings from distinct classes");
    }
    const auto key = pair_key(a, b);
    const auto [it, inserted] = memo_.try_emplace(key, kOnPath);
    if (!inserted) {
      if (it->second == kOnPath) throw InternalError("lcp walk revisited a pair");
      end_value = it->second;
      break;
    }
    path_.push_back(key);
    if (o.label(a) != o.label(b)) {
      labels_differ = true;
      break;
    }
    a = o.tail(a);
    b = o.tail(b);
  }

  const auto steps = static_cast<std::uint32_t>(path_.size());
  for (std::uint32_t k = 0; k < steps; ++k) {
    memo_[path_[k]] = labels_differ ? steps - 1 - k : end_value + (steps - k);
  }
  return LcpValue(labels_differ ? steps - 1 : end_value + steps);
}

LcpValue lcp_pair(const JointColexOrder& o, Item a, Item b) {
  PairLcp lcp(o);
  return lcp(a, b);
}

namespace {

std::vector<LcpValue> adjacent_lcp(PairLcp& lcp, const std::vector<Item>& items) {
  std::vector<LcpValue> out;
  if (items.size() < 2) return out;
  out.reserve(items.size() - 1);
  for (std::size_t k = 1; k < items.size(); ++k) out.push_back(lcp(items[k - 1], items[k]));
  return out;
}

std::vector<Item> sorted_side(const JointColexOrder& o, Side side) {
  std::vector<Item> items;
  items.reserve(o.node_count());
  for (const Item i : o.sorted()) {
    if (i.side == side) items.push_back(i);
  }
  return items;
}

}  // namespace

std::vector<LcpValue> build_lcp_min(const JointColexOrder& o) {
  PairLcp lcp(o);
  return adjacent_lcp(lcp, sorted_side(o, Side::Min));
}

std::vector<LcpValue> build_lcp_max(const JointColexOrder& o) {
  PairLcp lcp(o);
  return adjacent_lcp(lcp, sorted_side(o, Side::Max));
}

std::vector<LcpValue> build_joint_lcp(const JointColexOrder& o) {
  PairLcp lcp(o);
  return adjacent_lcp(lcp, {o.sorted().begin(), o.sorted().end()});
}

LcpArrays LcpArrays::assemble(std::vector<LcpValue> lcp_min, std::vector<LcpValue> lcp_max,
                              std::vector<LcpValue> lcp_joint) {
  LcpArrays a;
  a.lcp_min = std::move(lcp_min);
  a.lcp_max = std::move(lcp_max);
  a.lcp_joint = std::move(lcp_joint);
  std::vector<std::uint32_t> raw(a.lcp_joint.size());
  std::transform(a.lcp_joint.begin(), a.lcp_joint.end(), raw.begin(),
                 [](LcpValue v) { return v.raw(); });
  a.rmq_joint = SparseTableRmq(raw);
  return a;
}

LcpArrays build_lcp_arrays(const JointColexOrder& o) {
  // one memo serves all three arrays
  PairLcp lcp(o);
  auto lcp_min = adjacent_lcp(lcp, sorted_side(o, Side::Min));
  auto lcp_max = adjacent_lcp(lcp, sorted_side(o, Side::Max));
  auto joint = adjacent_lcp(lcp, {o.sorted().begin(), o.sorted().end()});
  return LcpArrays::assemble(std::move(lcp_min), std::move(lcp_max), std::move(joint));
}

LcpValue lcp_between(const LcpArrays& a, const JointColexOrder& o, std::size_t i, std::size_t j) {
  const std::size_t m = o.item_count();
  if (i < 1 || j > m || i >= j) {
    throw InputError("sorted positions must satisfy 1 <= i < j <= " + std::to_string(m));
  }
  if (a.rmq_joint.size() + 1 != m) throw InputError("lcp arrays do not belong to this order");
  // position p (1-based, p >= 2) is lcp_joint[p - 2]
  return LcpValue::from_raw(a.rmq_joint.min(i - 1, j - 1));
}

}  // namespace graphlcp
