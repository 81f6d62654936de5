#include "graphlcp/verify.hpp"

#include <algorithm>
#include <sstream>

#include "graphlcp/error.hpp"

namespace graphlcp {
namespace {

std::vector<std::vector<Symbol>> all_oracle_prefixes(const LabeledGraph& g) {
  const std::size_t len = oracle_prefix_length(g);
  std::vector<std::vector<Symbol>> out(2 * g.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = prefix_oracle(g, Item::from_index(i), len);
  return out;
}

LcpValue prefix_lcp(const std::vector<Symbol>& a, const std::vector<Symbol>& b) {
  const auto [ia, ib] = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
  if (ia == a.end()) return LcpValue::infinite();
  return LcpValue(static_cast<std::uint32_t>(ia - a.begin()));
}

std::string item_name(Item i) {
  return "(" + std::to_string(i.node) + "," + std::string(to_string(i.side)) + ")";
}

CheckFailure fail(std::string check, std::string detail) {
  return CheckFailure{std::move(check), std::move(detail), {}, std::nullopt};
}

}  // namespace

std::string describe_failure(const CheckFailure& f, const LabeledGraph& g) {
  std::ostringstream out;
  out << "counterexample: " << f.check << "\n";
  out << "detail: " << f.detail << "\n";
  if (!f.pattern.empty() || f.check == "ms" || f.check == "convexity") {
    out << "pattern: " << format_symbols(f.pattern, g.alphabet()) << "\n";
  }
  if (f.position) out << "position: " << *f.position << "\n";
  out << "graph:\n" << serialize_graph(g);
  return out.str();
}

std::optional<CheckFailure> check_order(const MSIndex& x) {
  const auto& g = x.graph();
  const auto& o = x.order();
  const std::size_t m = 2 * g.size();
  if (o.rounds() > m) {
    return fail("order", "refinement ran " + std::to_string(o.rounds()) + " rounds, bound is " +
                             std::to_string(m));
  }
  const auto prefixes = all_oracle_prefixes(g);
  const std::size_t len = oracle_prefix_length(g);
  for (std::size_t a = 0; a < m; ++a) {
    const Item ia = Item::from_index(a);
    if (item_prefix(o, ia, len) != prefixes[a]) {
      return fail("order", "tail links of " + item_name(ia) + " do not spell its oracle prefix");
    }
    for (std::size_t b = a + 1; b < m; ++b) {
      const Item ib = Item::from_index(b);
      const auto expect = prefixes[a] <=> prefixes[b];
      const auto got = compare_items(o, ia, ib);
      if (expect != got) {
        return fail("order", "compare_items disagrees with oracle prefixes on " + item_name(ia) +
                                 " vs " + item_name(ib));
      }
    }
  }
  // sorted sequence is nondecreasing with the documented tie-break
  for (std::size_t p = 1; p < m; ++p) {
    const Item a = o.sorted()[p - 1];
    const Item b = o.sorted()[p];
    if (std::pair{o.rank(a), a.index()} >= std::pair{o.rank(b), b.index()}) {
      return fail("order", "sorted sequence out of order at position " + std::to_string(p));
    }
  }
  return std::nullopt;
}

std::optional<CheckFailure> check_lcp(const MSIndex& x, std::mt19937_64& rng, std::size_t random_pairs) {
  const auto& g = x.graph();
  const auto& o = x.order();
  const auto& lcp = x.lcp();
  const std::size_t m = 2 * g.size();
  const auto prefixes = all_oracle_prefixes(g);
  const auto bound = static_cast<std::uint32_t>(2 * g.size() + 1);

  const auto check_adjacent = [&](const std::vector<LcpValue>& arr, const std::vector<Item>& items,
                                  const char* name) -> std::optional<CheckFailure> {
    if (arr.size() + 1 != items.size()) return fail("lcp", std::string(name) + " has the wrong length");
    for (std::size_t k = 1; k < items.size(); ++k) {
      const auto expect = prefix_lcp(prefixes[items[k - 1].index()], prefixes[items[k].index()]);
      if (arr[k - 1] != expect) {
        return fail("lcp", std::string(name) + "[" + std::to_string(k + 1) + "] = " +
                               arr[k - 1].to_string() + ", oracle says " + expect.to_string());
      }
      if (!arr[k - 1].is_infinite() && arr[k - 1].value() > bound) {
        return fail("lcp", std::string(name) + " value exceeds 2n+1");
      }
    }
    return std::nullopt;
  };
  std::vector<Item> joint(o.sorted().begin(), o.sorted().end());
  std::vector<Item> mins;
  std::vector<Item> maxs;
  for (const Item i : joint) (i.side == Side::Min ? mins : maxs).push_back(i);
  if (auto f = check_adjacent(lcp.lcp_joint, joint, "lcp_joint")) return f;
  if (auto f = check_adjacent(lcp.lcp_min, mins, "lcp_min")) return f;
  if (auto f = check_adjacent(lcp.lcp_max, maxs, "lcp_max")) return f;

  PairLcp pair(o);
  std::uniform_int_distribution<std::size_t> pick(0, m - 1);
  for (std::size_t t = 0; t < random_pairs; ++t) {
    const Item a = Item::from_index(pick(rng));
    const Item b = Item::from_index(pick(rng));
    const auto got = pair(a, b);
    const auto expect = prefix_lcp(prefixes[a.index()], prefixes[b.index()]);
    if (got != expect) {
      return fail("lcp", "lcp_pair" + item_name(a) + item_name(b) + " = " + got.to_string() +
                             ", oracle says " + expect.to_string());
    }
    if (!got.is_infinite() && got.value() > bound) return fail("lcp", "lcp_pair value exceeds 2n+1");
  }
  if (m >= 2) {
    std::uniform_int_distribution<std::size_t> pos(1, m);
    for (std::size_t t = 0; t < random_pairs; ++t) {
      std::size_t i = pos(rng);
      std::size_t j = pos(rng);
      if (i == j) continue;
      if (i > j) std::swap(i, j);
      const auto via_rmq = lcp_between(lcp, o, i, j);
      const auto direct = pair(o.sorted()[i - 1], o.sorted()[j - 1]);
      if (via_rmq != direct) {
        return fail("rmq", "lcp_between(" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                               via_rmq.to_string() + ", lcp_pair = " + direct.to_string());
      }
    }
  }
  return std::nullopt;
}

std::vector<NodeId> exact_occurrence_set(const LabeledGraph& g, std::span<const Symbol> text) {
  std::vector<char> in(g.size(), 1);
  for (const Symbol c : text) {
    std::vector<char> next(g.size(), 0);
    for (NodeId u = 0; u < g.size(); ++u) {
      if (!in[u]) continue;
      for (const NodeId v : g.successors(u)) {
        if (g.label(v) == c) next[v] = 1;
      }
    }
    in.swap(next);
  }
  std::vector<NodeId> out;
  for (NodeId u = 0; u < g.size(); ++u) {
    if (in[u]) out.push_back(u);
  }
  return out;
}

SweepCheck check_pattern(const MSIndex& x, std::span<const Symbol> pattern) {
  const auto& g = x.graph();
  const auto& chains = x.chains();
  SweepCheck result;
  const std::vector<Symbol> pat(pattern.begin(), pattern.end());

  const auto observe = [&](std::size_t begin, std::size_t end, const OccurrenceSet& held) {
    ++result.windows;
    if (!result.convexity_ok) return;
    const auto window = std::span(pattern).subspan(begin, end - begin);
    const auto exact = exact_occurrence_set(g, window);
    // contiguity of the exact set, chain by chain
    std::vector<std::vector<std::uint32_t>> positions(chains.width());
    for (const NodeId u : exact) {
      const auto at = chains.locate(u);
      positions[at.chain].push_back(at.pos);
    }
    std::size_t segments = 0;
    for (std::size_t c = 0; c < positions.size(); ++c) {
      auto& ps = positions[c];
      if (ps.empty()) continue;
      ++segments;
      std::sort(ps.begin(), ps.end());
      if (ps.back() - ps.front() + 1 != ps.size()) {
        result.convexity_ok = false;
        result.failure = CheckFailure{"convexity",
                                      "occurrence set of window [" + std::to_string(begin) + "," +
                                          std::to_string(end) + ") is split within chain " +
                                          std::to_string(c),
                                      pat, begin};
        return;
      }
    }
    result.max_segments = std::max(result.max_segments, segments);
    if (segments > x.width() || held.nodes(chains) != exact) {
      result.convexity_ok = false;
      result.failure = CheckFailure{"convexity",
                                    "sweep state for window [" + std::to_string(begin) + "," +
                                        std::to_string(end) + ") differs from the exact set",
                                    pat, begin};
    }
  };

  MSResult got;
  try {
    got = matching_statistics(x, pattern, observe);
  } catch (const InternalError& e) {
    result.convexity_ok = false;
    result.ms_ok = false;
    if (!result.failure) result.failure = CheckFailure{"convexity", e.what(), pat, std::nullopt};
    return result;
  }
  const auto expect = ms_oracle(g, pattern);
  if (got != expect) {
    result.ms_ok = false;
    std::size_t i = 0;
    while (got.values[i] == expect.values[i]) ++i;
    if (!result.failure) {
      result.failure = CheckFailure{"ms",
                                    "matching_statistics gives " + std::to_string(got.values[i]) +
                                        ", oracle gives " + std::to_string(expect.values[i]),
                                    pat, i};
    }
  }
  return result;
}

std::vector<Symbol> random_pattern(const LabeledGraph& g, std::mt19937_64& rng, std::size_t max_length) {
  std::vector<Symbol> alphabet;
  for (const Symbol s : g.labels()) {
    if (!s.is_sentinel()) alphabet.push_back(s);
  }
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  const Symbol absent{alphabet.empty() ? Symbol::from_code_point('a').value : alphabet.back().value + 1};

  const std::size_t length = std::uniform_int_distribution<std::size_t>(0, max_length)(rng);
  std::vector<Symbol> out;
  out.reserve(length);
  std::bernoulli_distribution coin(0.5);
  if (coin(rng) && !alphabet.empty()) {
    std::vector<NodeId> starts;
    for (NodeId u = 0; u < g.size(); ++u) {
      if (!g.label(u).is_sentinel()) starts.push_back(u);
    }
    const auto restart = [&] { return starts[std::uniform_int_distribution<std::size_t>(0, starts.size() - 1)(rng)]; };
    NodeId u = restart();
    std::vector<NodeId> next;
    while (out.size() < length) {
      out.push_back(g.label(u));
      next.clear();
      for (const NodeId v : g.successors(u)) {
        if (!g.label(v).is_sentinel()) next.push_back(v);
      }
      u = next.empty() ? restart() : next[std::uniform_int_distribution<std::size_t>(0, next.size() - 1)(rng)];
    }
    if (!out.empty() && !alphabet.empty() && coin(rng)) {
      const auto at = std::uniform_int_distribution<std::size_t>(0, out.size() - 1)(rng);
      out[at] = alphabet[std::uniform_int_distribution<std::size_t>(0, alphabet.size() - 1)(rng)];
    }
    return out;
  }
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size());
  for (std::size_t k = 0; k < length; ++k) {
    const std::size_t r = pick(rng);
    out.push_back(r < alphabet.size() ? alphabet[r] : absent);
  }
  return out;
}

}  // namespace graphlcp
