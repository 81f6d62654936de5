#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

#include "graphlcp/colex_order.hpp"
#include "graphlcp/sparse_table.hpp"

namespace graphlcp {

// Length of a longest common prefix of two infinite strings: a finite symbol
// count, or infinity when the strings are equal. Infinity is stored as the
// largest 32-bit value so that plain integer min is the correct combinator.
class LcpValue {
 public:
  static constexpr std::uint32_t kInfiniteRaw = std::numeric_limits<std::uint32_t>::max();

  constexpr LcpValue() = default;
  constexpr explicit LcpValue(std::uint32_t finite) : raw_(finite) {}

  static constexpr LcpValue infinite() { return from_raw(kInfiniteRaw); }
  static constexpr LcpValue from_raw(std::uint32_t raw) {
    LcpValue v;
    v.raw_ = raw;
    return v;
  }

  constexpr bool is_infinite() const noexcept { return raw_ == kInfiniteRaw; }
  constexpr std::uint32_t raw() const noexcept { return raw_; }
  // Precondition: !is_infinite().
  constexpr std::uint32_t value() const noexcept { return raw_; }

  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(raw_); }

  friend constexpr auto operator<=>(LcpValue, LcpValue) = default;
  friend std::ostream& operator<<(std::ostream& os, LcpValue v) { return os << v.to_string(); }

 private:
  std::uint32_t raw_ = 0;
};

// Pairwise LCP by walking tail links in lockstep. Results are memoized on
// unordered item pairs for the lifetime of the object; every pair reached by a
// walk is recorded, so later walks stop as soon as they join an earlier one.
class PairLcp {
 public:
  explicit PairLcp(const JointColexOrder& order) : order_(&order) {}

  // Throws InputError for foreign items and InternalError if a walk cycles
  // over pairs from distinct classes.
  LcpValue operator()(Item a, Item b);

  std::size_t memo_size() const noexcept { return memo_.size(); }

 private:
  const JointColexOrder* order_;
  std::unordered_map<std::uint64_t, std::uint32_t> memo_;
  std::vector<std::uint64_t> path_;
};

LcpValue lcp_pair(const JointColexOrder& o, Item a, Item b);

// Entry k (0-based) is the LCP of the k-th and (k+1)-th Min items in sorted
// order, i.e. the array indexed 2..n in 1-based terms.
std::vector<LcpValue> build_lcp_min(const JointColexOrder& o);
std::vector<LcpValue> build_lcp_max(const JointColexOrder& o);
// 2n - 1 entries over the jointly sorted items.
std::vector<LcpValue> build_joint_lcp(const JointColexOrder& o);

struct LcpArrays {
  std::vector<LcpValue> lcp_min;
  std::vector<LcpValue> lcp_max;
  std::vector<LcpValue> lcp_joint;
  SparseTableRmq rmq_joint;

  static LcpArrays assemble(std::vector<LcpValue> lcp_min, std::vector<LcpValue> lcp_max,
                            std::vector<LcpValue> lcp_joint);
};

LcpArrays build_lcp_arrays(const JointColexOrder& o);

// LCP of the items at 1-based sorted positions i < j, as the minimum of
// lcp_joint over positions i+1..j. Throws InputError on bad positions.
LcpValue lcp_between(const LcpArrays& a, const JointColexOrder& o, std::size_t i, std::size_t j);

}  // namespace graphlcp
