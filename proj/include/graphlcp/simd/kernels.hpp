#pragma once

// Data-parallel inner loops shared by the index structures.
//
// Every kernel has a portable scalar reference in `scalar::` and, on x86-64,
// an AVX2 variant in `avx2::`. The span-taking functions at namespace scope
// route through a dispatch table selected once at startup from CPUID; tests
// call both variants directly and require bit-identical results.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace graphlcp::simd {

enum class Isa : std::uint8_t { Scalar, Avx2 };

std::string_view to_string(Isa isa);

namespace scalar {
void min_u32(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out, std::size_t n);
bool is_subset(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
std::size_t popcount(const std::uint64_t* words, std::size_t n);
void or_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
}  // namespace scalar

#if defined(GRAPHLCP_HAVE_AVX2)
namespace avx2 {
void min_u32(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out, std::size_t n);
bool is_subset(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
std::size_t popcount(const std::uint64_t* words, std::size_t n);
void or_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
}  // namespace avx2
#endif

// True when the AVX2 variants were compiled in and the CPU reports AVX2.
bool avx2_supported();

Isa active_isa();

// Forces a kernel family for the whole process. Throws InputError when the
// requested family is unavailable. Not thread-safe against concurrent kernel
// calls; intended for tests and benchmarks.
void set_active_isa(Isa isa);

// out[i] = min(a[i], b[i]); all three spans have equal length.
void elementwise_min(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                     std::span<std::uint32_t> out);

// (a & ~b) == 0 over equally sized bitsets.
bool is_subset(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);

std::size_t popcount(std::span<const std::uint64_t> words);

// dst |= src
void or_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);

}  // namespace graphlcp::simd
