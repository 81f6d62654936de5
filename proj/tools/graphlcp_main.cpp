// graphlcp: build, query, inspect and cross-check co-lexicographic LCP indexes
// over node-labeled graphs.
//
// Exit status: 0 success, 1 input error, 2 internal-consistency failure,
// 3 property-check counterexample.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "graphlcp/error.hpp"
#include "graphlcp/index_document.hpp"
#include "graphlcp/matching_stats.hpp"
#include "graphlcp/verify.hpp"

namespace {

using namespace graphlcp;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInternal = 2;
constexpr int kExitCounterexample = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    std::string line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    pos = end + 1;
  }
  return lines;
}

LabeledGraph load_graph(const std::string& path, bool augment, bool edge_labeled) {
  LabeledGraph g = load_labeled_graph(read_file(path), edge_labeled);
  if (augment && !validate(g).ok && !g.sentinel()) g = augment_with_sentinel(g);
  return g;
}

bool looks_like_index(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  return first != std::string::npos && text[first] == '{';
}

template <typename Clock = std::chrono::steady_clock>
double ms_since(typename Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

int cmd_build(const std::string& graph_path, bool augment, bool edge_labeled, const std::string& out_path) {
  const auto start = std::chrono::steady_clock::now();
  auto g = load_graph(graph_path, augment, edge_labeled);
  const auto x = MSIndex::build(std::move(g));
  const auto doc = write_index_document(x);
  if (out_path.empty() || out_path == "-") {
    std::cout << doc;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + out_path + "'");
    out << doc;
  }
  std::cerr << "built index: n=" << x.graph().size() << " e=" << x.graph().edge_count()
            << " p=" << x.width() << " rounds=" << x.order().rounds() << " in " << ms_since(start)
            << " ms\n";
  return kExitOk;
}

int cmd_ms(const std::string& index_path, const std::string& patterns_path) {
  const auto x = read_index_document(read_file(index_path));
  std::string text;
  if (patterns_path.empty() || patterns_path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    text = read_file(patterns_path);
  }
  const auto lines = split_lines(text);
  std::vector<std::string> out(lines.size());

  const auto answer = [&](std::size_t k) {
    const auto pattern = parse_pattern(lines[k], x.graph().alphabet());
    const auto ms = matching_statistics(x, pattern);
    std::string line = std::to_string(k + 1) + "\t" + lines[k] + "\t";
    for (std::size_t i = 0; i < ms.values.size(); ++i) {
      if (i > 0) line += ' ';
      line += std::to_string(ms.values[i]);
    }
    out[k] = std::move(line);
  };

  // parse errors surface before any thread starts
  for (const auto& l : lines) (void)parse_pattern(l, x.graph().alphabet());

  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(1, lines.size() / 16));
  if (workers <= 1) {
    for (std::size_t k = 0; k < lines.size(); ++k) answer(k);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t k = w; k < lines.size(); k += workers) answer(k);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  for (const auto& line : out) std::cout << line << '\n';
  return kExitOk;
}

int cmd_dump(const std::string& index_path, const std::string& what) {
  const auto x = read_index_document(read_file(index_path));
  const auto print_lcp = [](const std::vector<LcpValue>& values) {
    for (const auto v : values) std::cout << v.to_string() << '\n';
  };
  if (what == "lcp-min") {
    print_lcp(x.lcp().lcp_min);
  } else if (what == "lcp-max") {
    print_lcp(x.lcp().lcp_max);
  } else if (what == "lcp-joint") {
    print_lcp(x.lcp().lcp_joint);
  } else if (what == "order") {
    for (const Item i : x.order().sorted()) {
      std::cout << x.order().rank(i) << '\t' << i.node << '\t' << to_string(i.side) << '\n';
    }
  } else if (what == "chains") {
    const auto& chains = x.chains();
    for (std::size_t c = 0; c < chains.width(); ++c) {
      const auto chain = chains.chain(c);
      for (std::size_t p = 0; p < chain.size(); ++p) std::cout << c << '\t' << p << '\t' << chain[p] << '\n';
    }
  } else {
    throw InputError("unknown --what '" + what + "'");
  }
  return kExitOk;
}

int cmd_check(const std::string& path, std::size_t patterns, std::uint64_t seed, bool augment,
              bool edge_labeled) {
  const auto text = read_file(path);
  std::optional<MSIndex> loaded;
  MSIndex x;
  if (looks_like_index(text)) {
    loaded = read_index_document(text);
    x = MSIndex::build(loaded->graph());
  } else {
    x = MSIndex::build(load_graph(path, augment, edge_labeled));
  }

  const auto report_failure = [&](const std::string& summary, const CheckFailure& f) {
    std::cout << summary << '\n' << describe_failure(f, x.graph());
    return kExitCounterexample;
  };

  if (loaded) {
    if (!(loaded->order() == x.order()) || !(loaded->chains() == x.chains()) ||
        loaded->lcp().lcp_joint != x.lcp().lcp_joint || loaded->lcp().lcp_min != x.lcp().lcp_min ||
        loaded->lcp().lcp_max != x.lcp().lcp_max) {
      return report_failure("index:mismatch",
                            CheckFailure{"index", "stored index differs from a fresh build", {}, std::nullopt});
    }
  }

  std::mt19937_64 rng(seed);
  std::string order_status = "ok";
  std::string rmq_status = "ok";
  const auto order_failure = check_order(x);
  if (order_failure) order_status = "FAIL";
  const auto lcp_failure = check_lcp(x, rng, 1000);
  if (lcp_failure) rmq_status = "FAIL";

  std::size_t ms_pass = 0;
  bool convex = true;
  std::optional<CheckFailure> sweep_failure;
  for (std::size_t k = 0; k < patterns; ++k) {
    const auto pattern = random_pattern(x.graph(), rng, 40);
    const auto r = check_pattern(x, pattern);
    if (r.ms_ok) ++ms_pass;
    convex = convex && r.convexity_ok;
    if (r.failure && !sweep_failure) sweep_failure = r.failure;
  }

  std::ostringstream summary;
  summary << "ms:" << ms_pass << '/' << patterns << " order:" << order_status << " rmq:" << rmq_status
          << " convexity:" << (convex ? "ok" : "FAIL");
  if (order_failure) return report_failure(summary.str(), *order_failure);
  if (lcp_failure) return report_failure(summary.str(), *lcp_failure);
  if (sweep_failure) return report_failure(summary.str(), *sweep_failure);
  std::cout << summary.str() << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Co-lexicographic LCP indexes and matching statistics over labeled graphs"};
  app.require_subcommand(1);

  std::string graph_path;
  std::string index_path;
  std::string out_path;
  std::string patterns_path;
  std::string what;
  bool augment = false;
  bool edge_labeled = false;
  std::size_t patterns = 50;
  std::uint64_t seed = 1;

  auto* build = app.add_subcommand("build", "Build an index document from a graph file");
  build->add_option("graph-file", graph_path, "Graph description")->required();
  build->add_flag("--augment-sentinel", augment, "Add a $ source node feeding every node without predecessors");
  build->add_flag("--edge-labeled", edge_labeled, "Read the edge-labeled format");
  build->add_option("--out", out_path, "Output path (default: stdout)");

  auto* ms = app.add_subcommand("ms", "Matching statistics for patterns, one per line");
  ms->add_option("index-file", index_path, "Index document")->required();
  ms->add_option("patterns-file", patterns_path, "Pattern file (default: stdin)");

  auto* dump = app.add_subcommand("dump", "Print index arrays as TSV");
  dump->add_option("index-file", index_path, "Index document")->required();
  dump->add_option("--what", what, "lcp-min | lcp-max | lcp-joint | order | chains")->required();

  auto* check = app.add_subcommand("check", "Cross-check an index against brute-force oracles");
  check->add_option("graph-file", graph_path, "Graph description or index document")->required();
  check->add_option("--patterns", patterns, "Number of random patterns");
  check->add_option("--seed", seed, "Random seed");
  check->add_flag("--augment-sentinel", augment, "Add a $ source node feeding every node without predecessors");
  check->add_flag("--edge-labeled", edge_labeled, "Read the edge-labeled format");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*build) return cmd_build(graph_path, augment, edge_labeled, out_path);
    if (*ms) return cmd_ms(index_path, patterns_path);
    if (*dump) return cmd_dump(index_path, what);
    if (*check) return cmd_check(graph_path, patterns, seed, augment, edge_labeled);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInput;
}
