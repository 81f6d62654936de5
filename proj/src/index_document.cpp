#include "graphlcp/index_document.hpp"

#include <cstdio>
#include <json.hpp>

#include "graphlcp/error.hpp"

namespace graphlcp {
namespace {

using nlohmann::json;

json lcp_to_json(const std::vector<LcpValue>& values) {
  json out = json::array();
  for (const auto v : values) {
    if (v.is_infinite()) {
      out.push_back(nullptr);
    } else {
      out.push_back(v.value());
    }
  }
  return out;
}

std::vector<LcpValue> lcp_from_json(const json& j) {
  std::vector<LcpValue> out;
  for (const auto& v : j) {
    if (v.is_null()) {
      out.push_back(LcpValue::infinite());
    } else {
      const auto raw = v.get<std::uint32_t>();
      if (raw == LcpValue::kInfiniteRaw) throw InputError("lcp value out of range");
      out.push_back(LcpValue(raw));
    }
  }
  return out;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

Side side_from_string(const std::string& s) {
  if (s == "MIN") return Side::Min;
  if (s == "MAX") return Side::Max;
  throw InputError("unknown item side '" + s + "'");
}

}  // namespace

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string write_index_document(const MSIndex& x) {
  const auto& g = x.graph();
  const auto& o = x.order();
  const auto kind = g.alphabet();

  json graph;
  graph["alphabet"] = std::string(to_string(kind));
  json labels = json::array();
  for (const Symbol s : g.labels()) labels.push_back(format_symbol(s, kind));
  graph["labels"] = std::move(labels);
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back(json::array({e.src, e.dst}));
  graph["edges"] = std::move(edges);
  graph["sentinel"] = g.sentinel() ? json(*g.sentinel()) : json(nullptr);

  // [node, side, rank, tail node] per sorted position
  json sorted = json::array();
  for (const Item i : o.sorted()) {
    sorted.push_back(json::array({i.node, std::string(to_string(i.side)), o.rank(i), o.tail(i).node}));
  }

  json chains = json::array();
  for (const auto& chain : x.chains().chains()) chains.push_back(chain);

  json doc;
  doc["version"] = std::string(kIndexVersion);
  doc["graph"] = std::move(graph);
  doc["order"] = {{"sorted", std::move(sorted)}, {"classes", o.class_count()}};
  doc["lcp_min"] = lcp_to_json(x.lcp().lcp_min);
  doc["lcp_max"] = lcp_to_json(x.lcp().lcp_max);
  doc["lcp_joint"] = lcp_to_json(x.lcp().lcp_joint);
  doc["width"] = {{"p", x.width()},
                  {"chains", std::move(chains)},
                  {"antichain", std::vector<NodeId>(x.chains().antichain().begin(),
                                                    x.chains().antichain().end())}};
  doc["build"] = {{"rounds", o.rounds()},
                  {"nodes", g.size()},
                  {"edges", g.edge_count()},
                  {"sigma", g.sigma()}};
  doc["fingerprint"] = hex64(fnv1a64(doc.dump()));
  return doc.dump(1) + "\n";
}

MSIndex read_index_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("index document is not valid JSON: ") + e.what());
  }
  try {
    if (!doc.is_object() || !doc.contains("version")) throw InputError("not an index document");
    const auto version = doc.at("version").get<std::string>();
    if (version != kIndexVersion) {
      throw InputError("unsupported index version '" + version + "' (expected " +
                       std::string(kIndexVersion) + ")");
    }
    const auto stored = doc.at("fingerprint").get<std::string>();
    json payload = doc;
    payload.erase("fingerprint");
    if (hex64(fnv1a64(payload.dump())) != stored) {
      throw InputError("fingerprint mismatch: index document is corrupted");
    }

    const auto& jg = doc.at("graph");
    const auto kind = alphabet_from_string(jg.at("alphabet").get<std::string>());
    std::vector<Symbol> labels;
    for (const auto& l : jg.at("labels")) labels.push_back(parse_symbol(l.get<std::string>(), kind));
    std::vector<Edge> edges;
    for (const auto& e : jg.at("edges")) edges.push_back({e.at(0).get<NodeId>(), e.at(1).get<NodeId>()});
    const std::size_t n = labels.size();
    LabeledGraph g(labels, std::move(edges), kind);

    std::vector<std::uint32_t> ranks(2 * n, 0);
    std::vector<std::uint32_t> tails(2 * n, 0);
    std::vector<char> seen(2 * n, 0);
    const auto& sorted = doc.at("order").at("sorted");
    if (sorted.size() != 2 * n) throw InputError("sorted item sequence has the wrong length");
    for (const auto& entry : sorted) {
      const Item item{entry.at(0).get<NodeId>(), side_from_string(entry.at(1).get<std::string>())};
      const auto tail_node = entry.at(3).get<NodeId>();
      if (item.node >= n || tail_node >= n || seen[item.index()]) {
        throw InputError("sorted item sequence is inconsistent");
      }
      seen[item.index()] = 1;
      ranks[item.index()] = entry.at(2).get<std::uint32_t>();
      tails[item.index()] = static_cast<std::uint32_t>(Item{tail_node, item.side}.index());
    }
    auto order = JointColexOrder::from_parts(std::move(labels), std::move(ranks), std::move(tails),
                                             doc.at("build").at("rounds").get<std::size_t>());
    for (std::size_t p = 0; p < 2 * n; ++p) {
      const auto& entry = sorted[p];
      const Item expect{entry.at(0).get<NodeId>(), side_from_string(entry.at(1).get<std::string>())};
      if (order.sorted()[p] != expect) throw InputError("sorted item sequence is not in rank order");
    }

    auto lcp = LcpArrays::assemble(lcp_from_json(doc.at("lcp_min")), lcp_from_json(doc.at("lcp_max")),
                                   lcp_from_json(doc.at("lcp_joint")));

    const auto& jw = doc.at("width");
    auto chains = ChainDecomposition::from_parts(
        n, jw.at("chains").get<std::vector<std::vector<NodeId>>>(),
        jw.at("antichain").get<std::vector<NodeId>>());
    if (chains.width() != jw.at("p").get<std::size_t>()) throw InputError("stored p disagrees with chains");

    return MSIndex::from_parts(std::move(g), std::move(order), std::move(lcp), std::move(chains));
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed index document: ") + e.what());
  }
}

}  // namespace graphlcp
