#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "graphlcp/graph.hpp"
#include "graphlcp/symbol.hpp"

namespace graphlcp::testing {

inline Symbol sym(char c) { return Symbol::from_code_point(static_cast<unsigned char>(c)); }

inline std::vector<Symbol> syms(std::string_view text) { return parse_pattern(text, AlphabetKind::Character); }

inline std::string str(const std::vector<Symbol>& text) { return format_symbols(text, AlphabetKind::Character); }

// PATH3 = {s:$, v1:a, v2:b, v3:c; s->s, s->v1, v1->v2, v2->v3}
struct Path3 {
  static constexpr NodeId v1 = 0, v2 = 1, v3 = 2, s = 3;
};
inline LabeledGraph path3() {
  return augment_with_sentinel(parse_graph("v 0 a\nv 1 b\nv 2 c\ne 0 1\ne 1 2\n"));
}
inline LabeledGraph path3_unaugmented() { return parse_graph("v 0 a\nv 1 b\nv 2 c\ne 0 1\ne 1 2\n"); }

// CYCLE2 = {u:a, v:b; u->v, v->u}
struct Cycle2 {
  static constexpr NodeId u = 0, v = 1;
};
inline LabeledGraph cycle2() { return parse_graph("v 0 a\nv 1 b\ne 0 1\ne 1 0\n"); }

// TWINS = {x:a, y:a; x->x, y->y}
struct Twins {
  static constexpr NodeId x = 0, y = 1;
};
inline LabeledGraph twins() { return parse_graph("v 0 a\nv 1 a\ne 0 0\ne 1 1\n"); }

// WIDTH2 = {s:$, b1:b, c1:c, d1:d, x:a, z:a; s->s, s->b1, s->c1, s->d1,
//           b1->x, c1->x, b1->z, d1->z}
struct Width2 {
  static constexpr NodeId b1 = 0, c1 = 1, d1 = 2, x = 3, z = 4, s = 5;
};
inline LabeledGraph width2() {
  return augment_with_sentinel(
      parse_graph("v 0 b\nv 1 c\nv 2 d\nv 3 a\nv 4 a\ne 0 3\ne 1 3\ne 0 4\ne 2 4\n"));
}

// Binary de Bruijn graph of order 3: node xyz (as a 3-bit number) is labeled
// with its last symbol z and has edges to yz0 and yz1.
inline LabeledGraph de_bruijn3() {
  std::vector<Symbol> labels;
  std::vector<Edge> edges;
  for (NodeId u = 0; u < 8; ++u) {
    labels.push_back(sym((u & 1) ? 'b' : 'a'));
    for (NodeId w = 0; w < 2; ++w) edges.push_back({u, ((u << 1) & 7) | w});
  }
  return LabeledGraph(std::move(labels), std::move(edges));
}

// Path t[0] -> t[1] -> ... with a sentinel feeding t[0]; node i carries t[i]
// and the sentinel is node t.size().
inline LabeledGraph path_from_string(std::string_view t) {
  std::vector<Symbol> labels;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < t.size(); ++i) {
    labels.push_back(sym(t[i]));
    if (i + 1 < t.size()) edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>(i + 1)});
  }
  return augment_with_sentinel(LabeledGraph(std::move(labels), std::move(edges)), true);
}

}  // namespace graphlcp::testing
