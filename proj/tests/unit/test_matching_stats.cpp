#include <doctest.h>

#include <random>
#include <thread>

#include "corpus.hpp"
#include "fixtures.hpp"
#include "graphlcp/error.hpp"
#include "graphlcp/matching_stats.hpp"
#include "graphlcp/verify.hpp"

using namespace graphlcp;
using namespace graphlcp::testing;

namespace {

std::vector<std::uint32_t> ms(const MSIndex& x, std::string_view p) {
  return matching_statistics(x, syms(p)).values;
}

OccurrenceSet single(const MSIndex& x, NodeId u) {
  NodeSet s(x.graph().size());
  s.insert(u);
  return OccurrenceSet::from_nodes(x.chains(), s);
}

}  // namespace

TEST_SUITE_BEGIN("matching-stats");

TEST_CASE("build_ms_index") {
  const auto p = MSIndex::build(path3());
  CHECK(p.width() == 1);
  CHECK(p.graph().size() == 4);
  CHECK(p.lcp().lcp_joint.size() == 7);
  CHECK(MSIndex::build(width2()).width() == 2);
  CHECK_THROWS_WITH_AS(MSIndex::build(LabeledGraph{}), doctest::Contains("nothing to index"), InputError);
  CHECK_THROWS_WITH_AS(MSIndex::build(path3_unaugmented()), doctest::Contains("no-incoming-edge: node 0"),
                       InputError);
}

TEST_CASE("label-indexed adjacency") {
  const auto x = MSIndex::build(width2());
  const auto succ = x.successors_labeled(Width2::b1, sym('a'));
  CHECK(std::vector<NodeId>(succ.begin(), succ.end()) == std::vector<NodeId>{Width2::x, Width2::z});
  CHECK(x.successors_labeled(Width2::b1, sym('b')).empty());
  const auto as = x.nodes_labeled(sym('a'));
  CHECK(std::vector<NodeId>(as.begin(), as.end()) == std::vector<NodeId>{Width2::x, Width2::z});
  CHECK(x.nodes_labeled(sym('q')).empty());
}

TEST_CASE("occurrence_step") {
  const auto x = MSIndex::build(path3());
  const auto everything = OccurrenceSet::all(x.chains());
  CHECK(everything.node_count() == 4);

  const auto a = occurrence_step(x, everything, sym('a'));
  CHECK(a.nodes(x.chains()) == std::vector<NodeId>{Path3::v1});
  const auto ab = occurrence_step(x, single(x, Path3::v1), sym('b'));
  CHECK(ab.nodes(x.chains()) == std::vector<NodeId>{Path3::v2});
  CHECK(occurrence_step(x, single(x, Path3::v1), sym('c')).empty());
}

TEST_CASE("occurrence_step is exact on random graphs") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const auto x = MSIndex::build(random_graph(rng));
    const auto& g = x.graph();
    for (int k = 0; k < 10; ++k) {
      const auto y = random_pattern(g, rng, 6);
      const auto s = OccurrenceSet::from_nodes(x.chains(), [&] {
        NodeSet set(g.size());
        for (const NodeId u : exact_occurrence_set(g, y)) set.insert(u);
        return set;
      }());
      REQUIRE(s.segment_count() <= x.width());
      for (const Symbol c : g.labels()) {
        std::vector<NodeId> expect;
        const auto in_s = s.nodes(x.chains());
        for (NodeId v = 0; v < g.size(); ++v) {
          if (g.label(v) != c) continue;
          for (const NodeId u : g.predecessors(v)) {
            if (std::binary_search(in_s.begin(), in_s.end(), u)) {
              expect.push_back(v);
              break;
            }
          }
        }
        REQUIRE(occurrence_step(x, s, c).nodes(x.chains()) == expect);
      }
    }
  }
}

TEST_CASE("matching_statistics fixtures") {
  const auto p = MSIndex::build(path3());
  CHECK(ms(p, "abc") == std::vector<std::uint32_t>{3, 2, 1});
  CHECK(ms(p, "acb") == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(ms(p, "").empty());
  CHECK(ms(p, "xabcx") == std::vector<std::uint32_t>{0, 3, 2, 1, 0});
  CHECK(ms(p, "$abc") == std::vector<std::uint32_t>{4, 3, 2, 1});
  const auto c = MSIndex::build(cycle2());
  CHECK(ms(c, "abab") == std::vector<std::uint32_t>{4, 3, 2, 1});
  CHECK(ms(c, "aab") == std::vector<std::uint32_t>{1, 2, 1});
  CHECK(ms(MSIndex::build(twins()), "aaaa") == std::vector<std::uint32_t>{4, 3, 2, 1});
}

TEST_CASE("ms_oracle fixtures") {
  CHECK(ms_oracle(path3(), syms("abc")).values == std::vector<std::uint32_t>{3, 2, 1});
  CHECK(ms_oracle(width2(), syms("ba")).values == std::vector<std::uint32_t>{2, 1});
  CHECK(ms_oracle(cycle2(), syms("zz")).values == std::vector<std::uint32_t>{0, 0});
}

TEST_CASE("occurs") {
  const auto p = MSIndex::build(path3());
  CHECK(occurs(p, syms("ab")));
  CHECK_FALSE(occurs(p, syms("cb")));
  CHECK(occurs(p, syms("")));
  CHECK(occurs(MSIndex::build(width2()), syms("da")));
  CHECK_FALSE(occurs(MSIndex::build(width2()), syms("caa")));
}

TEST_CASE("random graphs: equivalence, monotonicity, bounds") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 60; ++trial) {
    const auto x = MSIndex::build(random_graph(rng));
    for (int k = 0; k < 10; ++k) {
      const auto w = random_pattern(x.graph(), rng, 40);
      const auto got = matching_statistics(x, w);
      REQUIRE(got == ms_oracle(x.graph(), w));
      const std::size_t m = w.size();
      for (std::size_t i = 0; i < m; ++i) {
        REQUIRE(got.values[i] <= m - i);
        if (i + 1 < m) REQUIRE(got.values[i + 1] + 1 >= got.values[i]);
        REQUIRE(occurs(x, std::span(w).subspan(i, got.values[i])));
        if (i + got.values[i] < m) REQUIRE_FALSE(occurs(x, std::span(w).subspan(i, got.values[i] + 1)));
      }
    }
  }
}

TEST_CASE("concurrent queries share one index") {
  std::mt19937_64 rng(8);
  const auto x = MSIndex::build(random_graph(rng));
  std::vector<std::vector<Symbol>> patterns;
  for (int k = 0; k < 64; ++k) patterns.push_back(random_pattern(x.graph(), rng, 40));
  std::vector<MSResult> serial;
  for (const auto& p : patterns) serial.push_back(matching_statistics(x, p));

  std::vector<MSResult> parallel(patterns.size());
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < 4; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t k = t; k < patterns.size(); k += 4) parallel[k] = matching_statistics(x, patterns[k]);
    });
  }
  for (auto& th : pool) th.join();
  CHECK(parallel == serial);
}

TEST_SUITE_END();
