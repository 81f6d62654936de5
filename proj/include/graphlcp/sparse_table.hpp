#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "graphlcp/simd/kernels.hpp"

namespace graphlcp {

// O(1) range-minimum over a fixed array of 32-bit values, O(n log n) words.
// Level k holds min(values[i .. i + 2^k)); each level is one elementwise-min
// kernel call over two shifted views of the level below.
class SparseTableRmq {
 public:
  SparseTableRmq() = default;

  explicit SparseTableRmq(std::span<const std::uint32_t> values) {
    const std::size_t n = values.size();
    if (n == 0) return;
    levels_.emplace_back(values.begin(), values.end());
    for (std::size_t width = 1; 2 * width <= n; width *= 2) {
      const auto& prev = levels_.back();
      std::vector<std::uint32_t> level(n - 2 * width + 1);
      simd::elementwise_min(std::span(prev).first(level.size()),
                            std::span(prev).subspan(width, level.size()), level);
      levels_.push_back(std::move(level));
    }
  }

  std::size_t size() const noexcept { return levels_.empty() ? 0 : levels_.front().size(); }

  // Minimum over [begin, end); requires begin < end <= size().
  std::uint32_t min(std::size_t begin, std::size_t end) const {
    assert(begin < end && end <= size());
    const auto k = static_cast<std::size_t>(std::bit_width(end - begin) - 1);
    const auto& level = levels_[k];
    const std::uint32_t a = level[begin];
    const std::uint32_t b = level[end - (std::size_t{1} << k)];
    return a < b ? a : b;
  }

 private:
  std::vector<std::vector<std::uint32_t>> levels_;
};

}  // namespace graphlcp
