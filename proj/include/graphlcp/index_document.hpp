#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "graphlcp/matching_stats.hpp"

namespace graphlcp {

inline constexpr std::string_view kIndexVersion = "graphlcp-index/1";

// Serialized index: a single JSON document holding the graph, the sorted item
// sequence with ranks and tail links, the three LCP arrays (null = infinity),
// the chain decomposition and build counters. The `fingerprint` member is an
// FNV-1a 64 hash of the compact dump of every other member, so any edit to
// the payload is detected on load.
//
// Output is byte-identical for identical indexes.
std::string write_index_document(const MSIndex& x);

// Throws InputError on malformed JSON, an unknown version, a fingerprint
// mismatch or inconsistent components.
MSIndex read_index_document(std::string_view text);

std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace graphlcp
