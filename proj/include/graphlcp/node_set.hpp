#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "graphlcp/simd/kernels.hpp"

namespace graphlcp {

// Fixed-universe bitset over node ids. Bulk operations go through the SIMD
// kernel dispatch table.
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const noexcept { return universe_; }

  void insert(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool contains(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }

  std::size_t count() const { return simd::popcount(words_); }

  bool subset_of(const NodeSet& other) const { return simd::is_subset(words_, other.words_); }

  NodeSet& operator|=(const NodeSet& other) {
    simd::or_into(words_, other.words_);
    return *this;
  }

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const auto bit = static_cast<std::size_t>(__builtin_ctzll(bits));
        fn(w * 64 + bit);
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const NodeSet&, const NodeSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace graphlcp
