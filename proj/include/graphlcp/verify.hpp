#pragma once

// Cross-checks of a built index against the definition-level oracles. Used by
// `graphlcp check` and by the acceptance suite.

#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "graphlcp/matching_stats.hpp"

namespace graphlcp {

struct CheckFailure {
  std::string check;   // "order", "lcp", "rmq", "ms", "convexity"
  std::string detail;
  std::vector<Symbol> pattern;
  std::optional<std::size_t> position;
};

// Replayable description: the failing check, the detail line, the pattern and
// position if any, and the graph in text form.
std::string describe_failure(const CheckFailure& f, const LabeledGraph& g);

// Prefix length at which every pair of distinct item strings already differs.
inline std::size_t oracle_prefix_length(const LabeledGraph& g) { return 2 * g.size() + 2; }

// All 2n items against min/max prefix oracles: pairwise comparisons, equality
// classes, tail consistency, and the 2n round bound.
std::optional<CheckFailure> check_order(const MSIndex& x);

// Adjacent entries of the three LCP arrays and `random_pairs` random item
// pairs against oracle prefix LCPs, the 2n+1 bound on finite values, and
// `random_pairs` random position pairs of lcp_between against lcp_pair.
std::optional<CheckFailure> check_lcp(const MSIndex& x, std::mt19937_64& rng, std::size_t random_pairs);

struct SweepCheck {
  bool ms_ok = true;
  bool convexity_ok = true;
  std::size_t windows = 0;
  std::size_t max_segments = 0;
  std::optional<CheckFailure> failure;
};

// Runs one sweep and checks the result against ms_oracle. For every window
// the sweep visits, the exact occurrence set is recomputed by brute force and
// must be contiguous within each chain and equal to the set the sweep holds.
SweepCheck check_pattern(const MSIndex& x, std::span<const Symbol> pattern);

// Nodes at which some walk spelling `text` ends, by plain forward simulation.
std::vector<NodeId> exact_occurrence_set(const LabeledGraph& g, std::span<const Symbol> text);

// Half of the patterns are spelled by random walks (sometimes with one
// substituted symbol), half are uniform over the graph's non-sentinel labels
// plus one symbol absent from the graph. Length is uniform in [0, max_length].
std::vector<Symbol> random_pattern(const LabeledGraph& g, std::mt19937_64& rng, std::size_t max_length);

}  // namespace graphlcp
