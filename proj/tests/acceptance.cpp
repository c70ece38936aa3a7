// One PASS/FAIL line per acceptance criterion. Arguments select criteria by
// number; none runs all. Exit status is non-zero iff a selected criterion fails.

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "apexkit/apex.hpp"
#include "apexkit/audit.hpp"
#include "apexkit/canon.hpp"
#include "apexkit/catalog.hpp"
#include "apexkit/connectivity.hpp"
#include "apexkit/generate.hpp"
#include "apexkit/graph6.hpp"
#include "apexkit/minors.hpp"
#include "apexkit/planarity.hpp"
#include "apexkit/search.hpp"
#include "apexkit/structure2.hpp"
#include "cli.hpp"
#include "oracles.hpp"

using namespace apexkit;
namespace fs = std::filesystem;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

const fs::path& work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("apexkit_acceptance_" + std::to_string(::getpid()));
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream ss(s);
  for (std::string l; std::getline(ss, l);) v.push_back(l);
  return v;
}

std::vector<std::string> canon_blocks(std::initializer_list<Figure> figs) {
  std::vector<std::string> v;
  for (Figure f : figs)
    for (const auto& g6 : figure_block(f)) v.push_back(canonical_g6(decode_graph6(g6)));
  std::sort(v.begin(), v.end());
  return v;
}

int cli(const std::vector<std::string>& args) {
  std::istringstream in;
  std::ostringstream out, err;
  return cli::run_cli(args, in, out, err);
}

std::string diff_summary(const std::vector<std::string>& got, const std::vector<std::string>& want) {
  std::vector<std::string> extra, missing;
  std::set_difference(got.begin(), got.end(), want.begin(), want.end(), std::back_inserter(extra));
  std::set_difference(want.begin(), want.end(), got.begin(), got.end(), std::back_inserter(missing));
  return "extras " + std::to_string(extra.size()) + ", misses " + std::to_string(missing.size());
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < n;) fn(i);
    });
  for (auto& t : pool) t.join();
}

// ---- criteria ----

Verdict catalog_verification() {
  const auto cat = load_catalog();
  int decoded = 0, conn2 = 0, certified = 0;
  std::set<std::string> canon;
  for (const auto& e : cat) {
    const Graph g = decode_graph6(e.g6);
    ++decoded;
    canon.insert(canonical_g6(g));
    conn2 += connectivity(g) == 2;
    const ObstructionResult r = is_obstruction(g);
    certified += r && r.certificate && validate_certificate(g, *r.certificate).empty();
  }
  const bool ok = cat.size() == 133 && decoded == 133 && canon.size() == 133 && conn2 == 133 && certified == 133;
  return {ok, "decoded " + std::to_string(decoded) + ", distinct " + std::to_string(canon.size()) +
                  ", connectivity 2: " + std::to_string(conn2) + ", certified obstructions " +
                  std::to_string(certified) + " (expected 133 each, exact)"};
}

std::pair<std::map<ObstructionClass, int>, std::vector<std::string>> census(HeavyRule rule) {
  ClassifyOptions opt;
  opt.heavy_rule = rule;
  std::map<ObstructionClass, int> c;
  std::vector<std::string> mismatched;
  for (const auto& e : load_catalog()) {
    const ObstructionClass label = classify(decode_graph6(e.g6), opt).label;
    ++c[label];
    if (label != e.expected) mismatched.push_back(e.g6);
  }
  return {c, mismatched};
}

std::string census_text(const std::map<ObstructionClass, int>& c) {
  std::string s;
  for (ObstructionClass k : {ObstructionClass::HeavyNonplanar, ObstructionClass::DisjointCuts,
                             ObstructionClass::MultiCutsGe3, ObstructionClass::ExactlyTwoCuts,
                             ObstructionClass::UniqueCutSplit, ObstructionClass::UniqueCutNosplit}) {
    const auto it = c.find(k);
    s += (s.empty() ? "" : "/") + std::to_string(it == c.end() ? 0 : it->second);
  }
  return s;
}

Verdict classification_census() {
  const auto [c, mismatched] = census(HeavyRule::BasicCut);
  std::string detail = "default rule census " + census_text(c) + " (expected 21/3/14/23/33/39, exact), " +
                       std::to_string(mismatched.size()) + " label mismatches";
  for (const auto& g6 : mismatched) detail += " " + g6;
  const auto [any, any_mismatched] = census(HeavyRule::AnyCut);
  detail += "; any-cut rule census " + census_text(any) + ", " + std::to_string(any_mismatched.size()) + " mismatches";
  return {mismatched.empty() && census_text(c) == "21/3/14/23/33/39", detail};
}

Verdict planar_generation_census() {
  std::uint64_t connected = 0, all = 0;
  const int workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  for (int n = 5; n <= 9; ++n) {
    connected += count_planar(PlanarFamily::Connected, n, workers);
    all += count_planar(PlanarFamily::All, n, workers);
  }
  return {connected == 87816, "generate_connected_planar n=5..9 sum " + std::to_string(connected) +
                                  " (expected 87816, exact); all planar graphs n=5..9 sum " + std::to_string(all)};
}

// workers = 1 run of the default search, checkpointed; shared by criteria 4 and 9
const fs::path& unique_cut_output() {
  static const fs::path out = [] {
    const fs::path o = work_dir() / "unique_cut_w1.g6";
    cli({"search", "unique-cut", "--workers", "1", "--checkpoint", (work_dir() / "unique_cut.ckpt").string(), "-o",
         o.string()});
    return o;
  }();
  return out;
}

Verdict unique_cut_search_criterion() {
  const auto start = std::chrono::steady_clock::now();
  const fs::path out = unique_cut_output();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  auto got = split_lines(slurp(out));
  const auto want = canon_blocks({Figure::ThirtyThree, Figure::ThirtyNine});
  int certified = 0;
  for (const auto& g6 : got) {
    const Graph g = decode_graph6(g6);
    const ObstructionResult r = is_obstruction(g);
    certified += r && validate_certificate(g, *r.certificate).empty();
  }
  // resume from the finished checkpoint reproduces the result without recomputation
  const fs::path ckpt = work_dir() / "unique_cut.ckpt";
  const fs::path again = work_dir() / "unique_cut_resumed.g6";
  const auto t2 = std::chrono::steady_clock::now();
  cli({"search", "unique-cut", "--checkpoint", ckpt.string(), "-o", again.string()});
  const double resume_secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t2).count();
  const bool resumed = slurp(again) == slurp(out);
  const bool header = slurp(ckpt).rfind("# apexkit checkpoint ", 0) == 0;
  std::sort(got.begin(), got.end());
  char times[96];
  std::snprintf(times, sizeof times, "search %.1fs, resume %.2fs", secs, resume_secs);
  return {got == want && certified == static_cast<int>(got.size()) && resumed && header,
          std::to_string(got.size()) + " graphs (expected the 72 of ThirtyThree+ThirtyNine, exact), " +
              diff_summary(got, want) + ", re-certified " + std::to_string(certified) + ", checkpoint resume " +
              (resumed && header ? "identical" : "DIFFERENT") + ", " + times};
}

Verdict heavy_nonplanar_criterion() {
  const SearchResult r = heavy_nonplanar_search(true);
  const auto want = canon_blocks({Figure::NonPlanarC});
  return {r.obstructions == want, std::to_string(r.obstructions.size()) + " graphs (expected the 21 of NonPlanarC, exact), " +
                                      diff_summary(r.obstructions, want)};
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (const Edge& e : a.edges()) g.add_edge(e.u, e.v);
  for (const Edge& e : b.edges()) g.add_edge(a.order() + e.u, a.order() + e.v);
  return g;
}

Verdict disconnected_criterion() {
  const Graph k5 = Graph::complete(5), k33 = Graph::complete_bipartite(3, 3);
  std::vector<std::string> want{canonical_g6(disjoint_union(k5, k5)), canonical_g6(disjoint_union(k33, k33)),
                                canonical_g6(disjoint_union(k5, k33))};
  std::sort(want.begin(), want.end());
  const SearchResult r = disconnected_search();
  return {r.obstructions == want,
          std::to_string(r.obstructions.size()) + " graphs (expected {2K5, 2K3,3, K5+K3,3}, exact), " +
              diff_summary(r.obstructions, want)};
}

Verdict audit_criterion() {
  const auto cat = load_catalog();
  AuditOptions opt;
  opt.cap = 1000;
  std::vector<AuditReport> reports(cat.size());
  parallel_for(cat.size(), [&](std::size_t i) { reports[i] = audit_graph(decode_graph6(cat[i].g6), opt); });
  int pass = 0, fail = 0, truncated = 0;
  for (const auto& r : reports) {
    pass += r.count(AuditStatus::Pass);
    fail += r.count(AuditStatus::Fail);
    truncated += r.count(AuditStatus::Truncated);
  }
  return {fail == 0, "cap 1000 over 133 graphs: " + std::to_string(pass) + " pass, " + std::to_string(fail) +
                         " fail (expected 0), " + std::to_string(truncated) + " truncated (allowed)"};
}

// 8a: Wagner's theorem on 10,000 seeded random graphs, n <= 10
std::string property_planarity_vs_minors(bool& ok) {
  std::mt19937_64 rng(20101);
  const Graph k5 = Graph::complete(5), k33 = Graph::complete_bipartite(3, 3);
  int agree = 0, planar = 0;
  for (int i = 0; i < 10000; ++i) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const Graph g = oracle::random_graph(rng, n, 0.3 + 0.6 * static_cast<double>(rng() % 100) / 100.0);
    const bool minor_free = !has_minor(g, k5) && !has_minor(g, k33);
    agree += is_planar(g) == minor_free;
    planar += minor_free;
  }
  ok = ok && agree == 10000;
  return "planarity/minors " + std::to_string(agree) + "/10000 (" + std::to_string(planar) + " planar)";
}

// 8b: connectivity and 2-cuts against subset enumeration, n <= 8
std::string property_connectivity(bool& ok) {
  std::mt19937_64 rng(20102);
  int agree = 0;
  const int trials = 3000;
  for (int i = 0; i < trials; ++i) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const Graph g = oracle::random_graph(rng, n, 0.2 + 0.75 * static_cast<double>(rng() % 100) / 100.0);
    bool same = connectivity(g) == oracle::brute_connectivity(g);
    if (same && n >= 4 && is_connected(g)) {
      const auto cuts = enumerate_two_cuts(g);
      const auto brute = oracle::brute_two_cuts(g);
      same = cuts.size() == brute.size();
      for (std::size_t k = 0; same && k < cuts.size(); ++k)
        same = cuts[k].cut == (bit(brute[k].first) | bit(brute[k].second));
    }
    agree += same;
  }
  ok = ok && agree == trials;
  return "connectivity/2-cuts " + std::to_string(agree) + "/" + std::to_string(trials);
}

// 8c: generator against every labeled graph, n <= 7
std::string property_generator(bool& ok) {
  auto from_mask = [](int n, std::uint64_t mask) {
    Graph g(n);
    int k = 0;
    for (int v = 1; v < n; ++v)
      for (int u = 0; u < v; ++u, ++k)
        if ((mask >> k) & 1) g.add_edge(u, v);
    return g;
  };
  bool good = true;
  for (int n = 1; n <= 7; ++n) {
    const std::uint64_t masks = std::uint64_t{1} << (n * (n - 1) / 2);
    std::uint64_t labeled = 0;
    std::set<std::uint64_t> classes;
    for (std::uint64_t m = 0; m < masks; ++m) {
      const Graph g = from_mask(n, m);
      if (!oracle::brute_connected(g, 0) || !is_planar(g)) continue;
      ++labeled;
      if (n <= 6) classes.insert(oracle::brute_key(g));
    }
    const auto gen = generate_connected_planar(n);
    std::uint64_t factorial = 1;
    for (int k = 2; k <= n; ++k) factorial *= k;
    std::uint64_t weighted = 0;
    std::set<std::uint64_t> gen_classes;
    for (const Graph& g : gen) {
      weighted += factorial / oracle::brute_automorphisms(g);
      if (n <= 6) gen_classes.insert(oracle::brute_key(g));
    }
    good = good && weighted == labeled;
    if (n <= 6) good = good && gen_classes == classes && gen_classes.size() == gen.size();
  }
  ok = ok && good;
  return std::string("generator n<=7 ") + (good ? "exact" : "MISMATCH");
}

// 8d: has_minor against the exhaustive deletion/contraction closure, n <= 7
std::string property_minor_tester(bool& ok) {
  std::vector<Graph> patterns;
  for (int n = 1; n <= 5; ++n) {
    std::set<std::uint64_t> keys;
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      Graph h(n);
      int k = 0;
      for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++k)
          if ((mask >> k) & 1) h.add_edge(u, v);
      if (keys.insert(oracle::brute_key(h)).second) patterns.push_back(h);
    }
  }
  for (const char* name : {"K33", "K5_minus_e", "K6"}) patterns.push_back(minor_pattern(name));
  patterns.push_back(Graph::cycle(6));
  patterns.push_back(Graph::cycle(7));
  std::mt19937_64 rng(20104);
  int agree = 0, checked = 0;
  for (int i = 0; i < 40; ++i) {
    const int n = 5 + static_cast<int>(rng() % 3);
    const Graph g = oracle::random_graph(rng, n, 0.3 + 0.5 * static_cast<double>(rng() % 100) / 100.0);
    const auto minors = oracle::brute_minor_keys(g);
    for (const Graph& h : patterns) {
      if (h.order() > g.order()) continue;
      ++checked;
      agree += has_minor(g, h) == (minors.count(oracle::brute_key(h)) > 0);
    }
  }
  ok = ok && agree == checked;
  return "minor tester " + std::to_string(agree) + "/" + std::to_string(checked);
}

Verdict property_suites() {
  bool ok = true;
  std::string d = property_planarity_vs_minors(ok);
  d += ", " + property_connectivity(ok);
  d += ", " + property_generator(ok);
  d += ", " + property_minor_tester(ok);
  return {ok, d + " (all exact)"};
}

Verdict workers_determinism() {
  const fs::path w1 = unique_cut_output();
  const fs::path w8 = work_dir() / "unique_cut_w8.g6";
  cli({"search", "unique-cut", "--workers", "8", "-o", w8.string()});
  const std::string a = slurp(w1), b = slurp(w8);
  // the 5..7 restriction exercises a second configuration
  const fs::path s1 = work_dir() / "small_w1.g6", s8 = work_dir() / "small_w8.g6";
  cli({"search", "unique-cut", "--heavy", "5..7", "--workers", "1", "-o", s1.string()});
  cli({"search", "unique-cut", "--heavy", "5..7", "--workers", "8", "-o", s8.string()});
  const bool small_same = slurp(s1) == slurp(s8) && !slurp(s1).empty();
  return {!a.empty() && a == b && small_same,
          "default search " + std::to_string(a.size()) + " vs " + std::to_string(b.size()) + " bytes, " +
              (a == b ? "identical" : "DIFFERENT") + "; heavy 5..7 " + (small_same ? "identical" : "DIFFERENT")};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"catalog verification", catalog_verification},
      {"classification census", classification_census},
      {"planar generation census", planar_generation_census},
      {"unique-cut search", unique_cut_search_criterion},
      {"heavy-nonplanar construction", heavy_nonplanar_criterion},
      {"disconnected search", disconnected_criterion},
      {"audit", audit_criterion},
      {"property suites", property_suites},
      {"workers 1 vs 8 byte-identical", workers_determinism},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!selected.empty() && !selected.count(id)) continue;
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failures += !v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << id << " " << criteria[i].first << ": " << v.detail
              << std::endl;
  }
  fs::remove_all(work_dir());
  return failures == 0 ? 0 : 1;
}
