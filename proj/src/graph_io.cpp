#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "graphlcp/error.hpp"
#include "graphlcp/graph.hpp"

namespace graphlcp {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_id(std::string_view token, std::size_t line) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size() || v >= 0xFFFFFFFFULL) {
    throw ParseError(line, "invalid node id '" + std::string(token) + "'");
  }
  return v;
}

struct RawEdge {
  std::uint64_t src;
  std::uint64_t dst;
  std::optional<Symbol> label;
  std::size_t line;
};

}  // namespace

GraphFile parse_graph_file(std::string_view text, bool force_edge_labeled) {
  bool edge_labeled = force_edge_labeled;
  AlphabetKind alphabet = AlphabetKind::Character;
  bool seen_body = false;

  // declared id -> (label, line)
  std::map<std::uint64_t, std::pair<std::optional<Symbol>, std::size_t>> nodes;
  std::vector<RawEdge> raw_edges;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().starts_with('#')) {
      if (end == text.size()) break;
      continue;
    }
    const std::string_view head = tokens.front();
    if (head == "format:" || head == "alphabet:") {
      if (seen_body) throw ParseError(line_no, "header line after node or edge declarations");
      if (tokens.size() != 2) throw ParseError(line_no, "malformed header");
      if (head == "format:") {
        if (tokens[1] == "edge-labeled") {
          edge_labeled = true;
        } else if (tokens[1] != "node-labeled") {
          throw ParseError(line_no, "unknown format '" + std::string(tokens[1]) + "'");
        }
      } else {
        try {
          alphabet = alphabet_from_string(tokens[1]);
        } catch (const InputError& e) {
          throw ParseError(line_no, e.what());
        }
      }
    } else if (head == "v") {
      seen_body = true;
      const std::size_t want = edge_labeled ? 2 : 3;
      if (tokens.size() != want) {
        throw ParseError(line_no, edge_labeled ? "expected 'v <id>'" : "expected 'v <id> <label>'");
      }
      const auto id = parse_id(tokens[1], line_no);
      std::optional<Symbol> label;
      if (!edge_labeled) {
        try {
          label = parse_symbol(tokens[2], alphabet);
        } catch (const InputError& e) {
          throw ParseError(line_no, e.what());
        }
        if (label->is_sentinel()) throw ParseError(line_no, "label '$' is reserved for the sentinel");
      }
      if (!nodes.emplace(id, std::pair{label, line_no}).second) {
        throw ParseError(line_no, "duplicate node id " + std::to_string(id));
      }
    } else if (head == "e") {
      seen_body = true;
      const std::size_t want = edge_labeled ? 4 : 3;
      if (tokens.size() != want) {
        throw ParseError(line_no, edge_labeled ? "expected 'e <src> <dst> <label>'"
                                               : "expected 'e <src> <dst>'");
      }
      RawEdge e{parse_id(tokens[1], line_no), parse_id(tokens[2], line_no), std::nullopt, line_no};
      if (edge_labeled) {
        try {
          e.label = parse_symbol(tokens[3], alphabet);
        } catch (const InputError& err) {
          throw ParseError(line_no, err.what());
        }
        if (e.label->is_sentinel()) throw ParseError(line_no, "label '$' is reserved for the sentinel");
      }
      raw_edges.push_back(e);
    } else {
      throw ParseError(line_no, "unrecognized directive '" + std::string(head) + "'");
    }
    if (end == text.size()) break;
  }

  std::map<std::uint64_t, NodeId> dense;
  for (const auto& [id, info] : nodes) dense.emplace(id, static_cast<NodeId>(dense.size()));
  const auto resolve = [&](std::uint64_t id, std::size_t line) {
    const auto it = dense.find(id);
    if (it == dense.end()) throw ParseError(line, "edge endpoint " + std::to_string(id) + " is undefined");
    return it->second;
  };

  if (edge_labeled) {
    EdgeLabeledGraph g;
    g.node_count = nodes.size();
    g.alphabet = alphabet;
    for (const auto& e : raw_edges) {
      g.edges.push_back({resolve(e.src, e.line), resolve(e.dst, e.line), *e.label});
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    return g;
  }

  std::vector<Symbol> labels;
  labels.reserve(nodes.size());
  for (const auto& [id, info] : nodes) labels.push_back(*info.first);
  std::vector<Edge> edges;
  edges.reserve(raw_edges.size());
  for (const auto& e : raw_edges) edges.push_back({resolve(e.src, e.line), resolve(e.dst, e.line)});
  return LabeledGraph(std::move(labels), std::move(edges), alphabet);
}

LabeledGraph parse_graph(std::string_view text) {
  auto file = parse_graph_file(text);
  if (!std::holds_alternative<LabeledGraph>(file)) {
    throw InputError("expected a node-labeled graph, found the edge-labeled format");
  }
  return std::get<LabeledGraph>(std::move(file));
}

LabeledGraph load_labeled_graph(std::string_view text, bool force_edge_labeled) {
  auto file = parse_graph_file(text, force_edge_labeled);
  if (auto* g = std::get_if<EdgeLabeledGraph>(&file)) return normalize_edge_labeled(*g);
  return std::get<LabeledGraph>(std::move(file));
}

std::string serialize_graph(const LabeledGraph& g) {
  std::ostringstream out;
  std::optional<NodeId> skip;
  if (g.sentinel()) {
    if (*g.sentinel() + 1 != g.size()) {
      throw InputError("sentinel must be the last node to serialize in text form");
    }
    skip = g.sentinel();
    out << "# sentinel-augmented\n";
  }
  if (g.alphabet() == AlphabetKind::Integer) out << "alphabet: integer\n";
  for (NodeId u = 0; u < g.size(); ++u) {
    if (u == skip) continue;
    out << "v " << u << ' ' << format_symbol(g.label(u), g.alphabet()) << '\n';
  }
  for (const auto& e : g.edges()) {
    if (e.src == skip || e.dst == skip) continue;
    out << "e " << e.src << ' ' << e.dst << '\n';
  }
  return out.str();
}

}  // namespace graphlcp
