#include <atomic>
#include <cassert>

#include "graphlcp/error.hpp"
#include "graphlcp/simd/kernels.hpp"

namespace graphlcp::simd {
namespace {

struct KernelTable {
  Isa isa;
  void (*min_u32)(const std::uint32_t*, const std::uint32_t*, std::uint32_t*, std::size_t);
  bool (*is_subset)(const std::uint64_t*, const std::uint64_t*, std::size_t);
  std::size_t (*popcount)(const std::uint64_t*, std::size_t);
  void (*or_into)(std::uint64_t*, const std::uint64_t*, std::size_t);
};

constexpr KernelTable kScalarTable{Isa::Scalar, scalar::min_u32, scalar::is_subset,
                                   scalar::popcount, scalar::or_into};
#if defined(GRAPHLCP_HAVE_AVX2)
constexpr KernelTable kAvx2Table{Isa::Avx2, avx2::min_u32, avx2::is_subset, avx2::popcount,
                                 avx2::or_into};
#endif

const KernelTable* detect() {
#if defined(GRAPHLCP_HAVE_AVX2)
  if (avx2_supported()) return &kAvx2Table;
#endif
  return &kScalarTable;
}

std::atomic<const KernelTable*>& table() {
  static std::atomic<const KernelTable*> t{detect()};
  return t;
}

const KernelTable& kernels() { return *table().load(std::memory_order_relaxed); }

}  // namespace

std::string_view to_string(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

bool avx2_supported() {
#if defined(GRAPHLCP_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2") != 0;
  return supported;
#else
  return false;
#endif
}

Isa active_isa() { return kernels().isa; }

void set_active_isa(Isa isa) {
  if (isa == Isa::Scalar) {
    table().store(&kScalarTable);
    return;
  }
#if defined(GRAPHLCP_HAVE_AVX2)
  if (avx2_supported()) {
    table().store(&kAvx2Table);
    return;
  }
#endif
  throw InputError("AVX2 kernels are not available on this machine");
}

void elementwise_min(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                     std::span<std::uint32_t> out) {
  assert(a.size() == b.size() && a.size() == out.size());
  kernels().min_u32(a.data(), b.data(), out.data(), out.size());
}

bool is_subset(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  assert(a.size() == b.size());
  return kernels().is_subset(a.data(), b.data(), a.size());
}

std::size_t popcount(std::span<const std::uint64_t> words) {
  return kernels().popcount(words.data(), words.size());
}

void or_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  assert(dst.size() == src.size());
  kernels().or_into(dst.data(), src.data(), dst.size());
}

}  // namespace graphlcp::simd
