// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "brute_force.hpp"
#include "corpus.hpp"
#include "fixtures.hpp"
#include "graphlcp/chain_width.hpp"
#include "graphlcp/graph.hpp"
#include "graphlcp/verify.hpp"
#include "process.hpp"

using namespace graphlcp;
using namespace graphlcp::testing;

namespace {

constexpr std::uint64_t kCorpusSeed = 20240601;
constexpr int kCorpusSize = 500;
constexpr int kPatternsPerGraph = 20;
constexpr std::size_t kMaxPatternLength = 40;
constexpr std::size_t kRandomPairs = 1000;

struct Outcome {
  bool ok = true;
  std::string note;
  std::string counterexample;

  void fail(std::string why, std::string replay = {}) {
    if (!ok) return;  // keep the first failure
    ok = false;
    note = std::move(why);
    counterexample = std::move(replay);
  }
};

std::vector<LabeledGraph> make_corpus() {
  std::mt19937_64 rng(kCorpusSeed);
  std::vector<LabeledGraph> corpus;
  corpus.reserve(kCorpusSize);
  for (int i = 0; i < kCorpusSize; ++i) corpus.push_back(random_graph(rng));
  return corpus;
}

std::string graph_text(const LabeledGraph& g) { return serialize_graph(g); }

Outcome order_correctness(const std::vector<MSIndex>& xs, double build_seconds) {
  Outcome r;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < xs.size() && r.ok; ++i) {
    if (const auto f = check_order(xs[i])) r.fail("graph " + std::to_string(i) + ": " + f->detail, describe_failure(*f, xs[i].graph()));
  }
  const double seconds = build_seconds + std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds >= 120.0) r.fail("took " + std::to_string(seconds) + " s");
  std::ostringstream note;
  note << xs.size() << " graphs, " << static_cast<int>(seconds * 1000) << " ms";
  if (r.ok) r.note = note.str();
  return r;
}

Outcome lcp_correctness(const std::vector<MSIndex>& xs) {
  Outcome r;
  std::mt19937_64 rng(kCorpusSeed + 1);
  for (std::size_t i = 0; i < xs.size() && r.ok; ++i) {
    if (const auto f = check_lcp(xs[i], rng, kRandomPairs)) r.fail("graph " + std::to_string(i) + ": " + f->detail, describe_failure(*f, xs[i].graph()));
  }
  if (r.ok) r.note = std::to_string(xs.size()) + " graphs, " + std::to_string(kRandomPairs) + " random pairs each";
  return r;
}

struct SweepTotals {
  Outcome ms;
  Outcome convexity;
};

SweepTotals sweeps(const std::vector<MSIndex>& xs) {
  SweepTotals t;
  std::mt19937_64 rng(kCorpusSeed + 2);
  std::size_t patterns = 0;
  std::size_t windows = 0;
  std::size_t worst_ratio_segments = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (int k = 0; k < kPatternsPerGraph; ++k) {
      const auto w = random_pattern(xs[i].graph(), rng, kMaxPatternLength);
      const auto c = check_pattern(xs[i], w);
      ++patterns;
      windows += c.windows;
      worst_ratio_segments = std::max(worst_ratio_segments, c.max_segments);
      const auto where = "graph " + std::to_string(i) + " pattern " + std::to_string(k);
      if (!c.ms_ok) t.ms.fail(where, c.failure ? describe_failure(*c.failure, xs[i].graph()) : std::string());
      if (!c.convexity_ok) t.convexity.fail(where, c.failure ? describe_failure(*c.failure, xs[i].graph()) : std::string());
    }
  }

  const auto p = MSIndex::build(path3());
  const auto c = MSIndex::build(cycle2());
  const auto expect = [&](const MSIndex& x, const char* name, const char* w, std::vector<std::uint32_t> want) {
    if (matching_statistics(x, syms(w)).values != want) t.ms.fail(std::string(name) + " \"" + w + "\" fixture");
  };
  expect(p, "PATH3", "abc", {3, 2, 1});
  expect(c, "CYCLE2", "abab", {4, 3, 2, 1});
  expect(p, "PATH3", "acb", {1, 1, 1});

  if (t.ms.ok) t.ms.note = std::to_string(patterns) + " patterns plus 3 fixtures";
  if (t.convexity.ok) {
    t.convexity.note = std::to_string(windows) + " windows, at most " + std::to_string(worst_ratio_segments) + " segments held";
  }
  return t;
}

Outcome width(const std::vector<LabeledGraph>& corpus, const std::vector<MSIndex>& xs) {
  Outcome r;
  std::size_t exhaustive = 0;
  for (std::size_t i = 0; i < xs.size() && r.ok; ++i) {
    const auto p = xs[i].width();
    const auto n = corpus[i].size();
    if (p < 1 || p > n) r.fail("graph " + std::to_string(i) + ": p=" + std::to_string(p) + " n=" + std::to_string(n), graph_text(corpus[i]));
    if (n <= 12) {
      ++exhaustive;
      const auto best = max_antichain_exhaustive(OracleNodeOrder(corpus[i]));
      if (best != p) {
        r.fail("graph " + std::to_string(i) + ": p=" + std::to_string(p) + " exhaustive=" + std::to_string(best), graph_text(corpus[i]));
      }
    }
  }
  const auto fixture = [&](const char* name, const LabeledGraph& g, std::size_t want) {
    const auto got = MSIndex::build(g).width();
    if (got != want) r.fail(std::string(name) + ": p=" + std::to_string(got));
  };
  fixture("PATH3", path3(), 1);
  fixture("CYCLE2", cycle2(), 1);
  fixture("WIDTH2", width2(), 2);
  fixture("de Bruijn order 3", de_bruijn3(), 1);
  if (r.ok) r.note = std::to_string(exhaustive) + " graphs searched exhaustively, 4 fixtures";
  return r;
}

Outcome string_reduction() {
  Outcome r;
  std::mt19937_64 rng(kCorpusSeed + 3);
  for (int trial = 0; trial < 100 && r.ok; ++trial) {
    const auto length = std::uniform_int_distribution<std::size_t>(1, 64)(rng);
    const auto t = random_string(rng, length, std::uniform_int_distribution<int>(1, 4)(rng));
    const auto x = MSIndex::build(path_from_string(t));
    const std::string rev(t.rbegin(), t.rend());
    const auto expect = suffix_sort_lcp(rev + "$");
    const auto& got = x.lcp().lcp_min;
    bool same = got.size() == expect.size();
    for (std::size_t k = 0; same && k < got.size(); ++k) same = got[k] == LcpValue(expect[k]);
    if (!same) {
      r.fail("lcp_min differs for \"" + t + "\"");
      break;
    }
    for (int k = 0; k < 5; ++k) {
      const auto pl = std::uniform_int_distribution<std::size_t>(0, 40)(rng);
      const auto w = random_string(rng, pl, 5);
      if (matching_statistics(x, syms(w)).values != string_matching_statistics(t, w)) {
        r.fail("matching statistics differ for text \"" + t + "\" pattern \"" + w + "\"");
        break;
      }
    }
  }
  if (r.ok) r.note = "100 strings, 5 patterns each";
  return r;
}

Outcome cli() {
  Outcome r;
  const std::string exe = GRAPHLCP_CLI;
  const std::filesystem::path data = GRAPHLCP_TEST_DATA;
  const std::filesystem::path golden = GRAPHLCP_GOLDEN;
  TempDir dir;

  const auto expect_exit = [&](const std::string& what, const std::string& cmd, int want) {
    const auto res = run(cmd, dir);
    if (res.exit_code != want) r.fail(what + ": exit " + std::to_string(res.exit_code) + ", expected " + std::to_string(want), res.err);
    return res;
  };
  const auto build = [&](const std::string& graph, const std::filesystem::path& out, const std::string& flags) {
    return expect_exit("build " + graph, exe + " build " + quote(data / graph) + " " + flags + " --out " + quote(out), 0);
  };

  // determinism
  build("width2.graph", dir / "a.idx", "--augment-sentinel");
  build("width2.graph", dir / "b.idx", "--augment-sentinel");
  if (slurp(dir / "a.idx") != slurp(dir / "b.idx")) r.fail("rebuild is not byte-identical");

  // round trip: CLI answers equal in-process answers on a freshly built index
  {
    std::mt19937_64 rng(kCorpusSeed + 4);
    const auto g = width2();
    const auto x = MSIndex::build(g);
    std::string patterns;
    std::string want;
    for (int k = 1; k <= 50; ++k) {
      const auto w = random_pattern(g, rng, 12);
      patterns += str(w) + "\n";
      std::string values;
      for (const auto v : matching_statistics(x, w).values) values += (values.empty() ? "" : " ") + std::to_string(v);
      want += std::to_string(k) + "\t" + str(w) + "\t" + values + "\n";
    }
    spit(dir / "patterns.txt", patterns);
    const auto res = expect_exit("ms", exe + " ms " + quote(dir / "a.idx") + " " + quote(dir / "patterns.txt"), 0);
    if (res.out != want) r.fail("ms answers from the index file differ from in-process answers");
  }

  // golden dumps
  build("path3.graph", dir / "path3.idx", "--augment-sentinel");
  build("twins.graph", dir / "twins.idx", "");
  const auto dump = [&](const std::filesystem::path& idx, const std::string& what, const std::string& file) {
    const auto res = expect_exit("dump " + what, exe + " dump " + quote(idx) + " --what " + what, 0);
    if (res.out != slurp(golden / file)) r.fail("golden mismatch: " + file, res.out);
  };
  dump(dir / "path3.idx", "lcp-joint", "path3_lcp_joint.tsv");
  dump(dir / "path3.idx", "order", "path3_order.tsv");
  dump(dir / "a.idx", "lcp-min", "width2_lcp_min.tsv");
  dump(dir / "twins.idx", "lcp-min", "twins_lcp_min.tsv");

  // exit-code contract
  expect_exit("check PATH3", exe + " check " + quote(data / "path3.graph") + " --augment-sentinel --patterns 50 --seed 1", 0);
  expect_exit("check WIDTH2", exe + " check " + quote(data / "width2.graph") + " --augment-sentinel --patterns 50 --seed 1", 0);
  expect_exit("build without sentinel", exe + " build " + quote(data / "path3.graph"), 1);
  expect_exit("unknown --what", exe + " dump " + quote(dir / "a.idx") + " --what nodes", 1);
  auto text = slurp(dir / "path3.idx");
  text[text.find('0', text.find("\"lcp_max\""))] = '1';
  spit(dir / "bad.idx", text);
  const auto bad = expect_exit("corrupted index", exe + " check " + quote(dir / "bad.idx"), 1);
  if (bad.err.find("fingerprint") == std::string::npos) r.fail("corrupted index not reported as a fingerprint mismatch", bad.err);

  if (r.ok) r.note = "determinism, round trip, 4 golden dumps, exit codes 0 and 1";
  return r;
}

bool report(const char* name, const Outcome& o) {
  std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << name;
  if (!o.note.empty()) std::cout << " (" << o.note << ")";
  std::cout << "\n";
  if (!o.ok && !o.counterexample.empty()) std::cout << o.counterexample << (o.counterexample.back() == '\n' ? "" : "\n");
  std::cout.flush();
  return o.ok;
}

}  // namespace

int main() {
  const auto corpus = make_corpus();
  const auto start = std::chrono::steady_clock::now();
  std::vector<MSIndex> xs;
  xs.reserve(corpus.size());
  for (const auto& g : corpus) xs.push_back(MSIndex::build(g));
  const double build_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  bool all = true;
  all &= report("order correctness", order_correctness(xs, build_seconds));
  all &= report("lcp correctness", lcp_correctness(xs));
  const auto s = sweeps(xs);
  all &= report("matching statistics equivalence", s.ms);
  all &= report("occurrence sets stay within p chain segments", s.convexity);
  all &= report("width", width(corpus, xs));
  all &= report("string reduction", string_reduction());
  all &= report("cli contract", cli());
  std::cout << (all ? "all criteria pass" : "some criteria fail") << "\n";
  return all ? 0 : 1;
}
