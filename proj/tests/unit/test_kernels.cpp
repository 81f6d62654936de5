#include <doctest.h>

#include <random>
#include <vector>

#include "graphlcp/node_set.hpp"
#include "graphlcp/simd/kernels.hpp"
#include "graphlcp/sparse_table.hpp"

using namespace graphlcp;

namespace {

std::vector<std::uint32_t> random_u32(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::uint32_t> v(n);
  // mix of small values and the infinity marker
  std::uniform_int_distribution<int> kind(0, 9);
  for (auto& x : v) x = kind(rng) == 0 ? UINT32_MAX : static_cast<std::uint32_t>(rng() % 70);
  return v;
}

std::vector<std::uint64_t> random_words(std::mt19937_64& rng, std::size_t n, double density) {
  std::vector<std::uint64_t> v(n, 0);
  std::bernoulli_distribution bit(density);
  for (auto& w : v) {
    for (int b = 0; b < 64; ++b) {
      if (bit(rng)) w |= std::uint64_t{1} << b;
    }
  }
  return v;
}

}  // namespace

TEST_SUITE_BEGIN("simd");

TEST_CASE("scalar kernels") {
  const std::vector<std::uint32_t> a{3, 9, UINT32_MAX, 0};
  const std::vector<std::uint32_t> b{4, 2, 7, UINT32_MAX};
  std::vector<std::uint32_t> out(4);
  simd::scalar::min_u32(a.data(), b.data(), out.data(), 4);
  CHECK(out == std::vector<std::uint32_t>{3, 2, 7, 0});

  const std::vector<std::uint64_t> x{0b0101, 0};
  const std::vector<std::uint64_t> y{0b0111, 1};
  CHECK(simd::scalar::is_subset(x.data(), y.data(), 2));
  CHECK_FALSE(simd::scalar::is_subset(y.data(), x.data(), 2));
  CHECK(simd::scalar::popcount(y.data(), 2) == 4);
}

#if defined(GRAPHLCP_HAVE_AVX2)
TEST_CASE("avx2 kernels match the scalar reference") {
  if (!simd::avx2_supported()) {
    MESSAGE("CPU lacks AVX2; skipping equivalence check");
    return;
  }
  std::mt19937_64 rng(3);
  for (std::size_t n : {0u, 1u, 3u, 4u, 7u, 8u, 9u, 15u, 16u, 17u, 31u, 64u, 100u, 257u}) {
    const auto a = random_u32(rng, n);
    const auto b = random_u32(rng, n);
    std::vector<std::uint32_t> s(n), v(n);
    simd::scalar::min_u32(a.data(), b.data(), s.data(), n);
    simd::avx2::min_u32(a.data(), b.data(), v.data(), n);
    CHECK(s == v);

    for (double density : {0.0, 0.1, 0.5, 1.0}) {
      const auto w = random_words(rng, n, density);
      CHECK(simd::scalar::popcount(w.data(), n) == simd::avx2::popcount(w.data(), n));

      auto sup = random_words(rng, n, 0.7);
      auto sub = w;
      for (std::size_t i = 0; i < n; ++i) sub[i] &= sup[i];
      CHECK(simd::avx2::is_subset(sub.data(), sup.data(), n));
      CHECK(simd::scalar::is_subset(w.data(), sup.data(), n) == simd::avx2::is_subset(w.data(), sup.data(), n));
      if (n > 0 && ~sup[n - 1] != 0) {
        // a single stray bit in the last word must be detected
        const std::uint64_t outside = ~sup[n - 1];
        auto stray = sub;
        stray[n - 1] |= outside & (~outside + 1);
        CHECK_FALSE(simd::scalar::is_subset(stray.data(), sup.data(), n));
        CHECK_FALSE(simd::avx2::is_subset(stray.data(), sup.data(), n));
      }

      auto ds = w;
      auto dv = w;
      simd::scalar::or_into(ds.data(), sup.data(), n);
      simd::avx2::or_into(dv.data(), sup.data(), n);
      CHECK(ds == dv);
    }
  }
}
#endif

TEST_CASE("dispatch can be pinned to either family") {
  const auto original = simd::active_isa();
  std::mt19937_64 rng(5);
  const auto values = random_u32(rng, 300);
  simd::set_active_isa(simd::Isa::Scalar);
  CHECK(simd::active_isa() == simd::Isa::Scalar);
  const SparseTableRmq scalar_table(values);
  if (simd::avx2_supported()) {
    simd::set_active_isa(simd::Isa::Avx2);
    CHECK(simd::active_isa() == simd::Isa::Avx2);
    const SparseTableRmq avx_table(values);
    for (std::size_t i = 0; i < values.size(); i += 7) {
      for (std::size_t j = i + 1; j <= values.size(); j += 5) CHECK(scalar_table.min(i, j) == avx_table.min(i, j));
    }
  }
  simd::set_active_isa(original);
}

TEST_CASE("sparse table agrees with a linear scan") {
  std::mt19937_64 rng(9);
  for (std::size_t n : {1u, 2u, 3u, 5u, 8u, 33u, 129u}) {
    const auto values = random_u32(rng, n);
    const SparseTableRmq rmq(values);
    REQUIRE(rmq.size() == n);
    for (std::size_t i = 0; i < n; ++i) {
      std::uint32_t running = UINT32_MAX;
      for (std::size_t j = i + 1; j <= n; ++j) {
        running = std::min(running, values[j - 1]);
        CHECK(rmq.min(i, j) == running);
      }
    }
  }
}

TEST_CASE("NodeSet") {
  NodeSet a(130);
  NodeSet b(130);
  for (std::size_t i : {0u, 64u, 129u}) a.insert(i);
  for (std::size_t i : {0u, 5u, 64u, 129u}) b.insert(i);
  CHECK(a.count() == 3);
  CHECK(a.subset_of(b));
  CHECK_FALSE(b.subset_of(a));
  a |= b;
  CHECK(a == b);
  std::vector<std::size_t> seen;
  b.for_each([&](std::size_t i) { seen.push_back(i); });
  CHECK(seen == std::vector<std::size_t>{0, 5, 64, 129});
}

TEST_SUITE_END();
