#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "apexkit/audit.hpp"
#include "apexkit/canon.hpp"
#include "apexkit/catalog.hpp"
#include "apexkit/errors.hpp"
#include "apexkit/generate.hpp"
#include "apexkit/graph6.hpp"
#include "apexkit/minors.hpp"
#include "apexkit/search.hpp"
#include "apexkit/structure2.hpp"
#include "manifest.hpp"

#ifndef APEXKIT_VERSION
#define APEXKIT_VERSION "0.0.0"
#endif

namespace apexkit::cli {

namespace fs = std::filesystem;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Outcome {
  std::string payload;
  json stats = json::object();
  int exit_code = kOk;
};

// A fully parsed command, ready to run or replay from the cache.
struct Job {
  std::string command;
  json config = json::object();
  json runtime = json::object();
  std::string input_path;  // graph6 input ("-" is stdin); empty if none
  std::string source_path;  // extra input file digested into the cache key
  std::function<Outcome(const std::vector<std::string>& lines)> run;
};

struct Globals {
  bool pretty = false;
  std::string output;
  std::string cache;
  bool no_cache = false;
};

std::string error_name(const Error& e) {
  if (dynamic_cast<const MalformedGraph6*>(&e)) return "MalformedGraph6";
  if (dynamic_cast<const NotClassifiable*>(&e)) return "NotClassifiable";
  if (dynamic_cast<const NotConnectivity2*>(&e)) return "NotConnectivity2";
  if (dynamic_cast<const NotATwoCut*>(&e)) return "NotATwoCut";
  if (dynamic_cast<const HeavyAmbiguous*>(&e)) return "HeavyAmbiguous";
  if (dynamic_cast<const ConfigInvalid*>(&e)) return "ConfigInvalid";
  if (dynamic_cast<const EdgeAbsent*>(&e)) return "EdgeAbsent";
  if (dynamic_cast<const VertexAbsent*>(&e)) return "VertexAbsent";
  return "Error";
}

std::pair<int, int> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(s);
      return {v, v};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("bad range '" + s + "', expected A..B");
  }
}

LightKind parse_light(const std::string& s) {
  if (s == "K5") return LightKind::K5;
  if (s == "K33") return LightKind::K33;
  if (s == "K33e") return LightKind::K33e;
  throw UsageError("unknown light kind '" + s + "', expected K5, K33 or K33e");
}

std::string table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      os << r[c];
      if (c + 1 < r.size()) os << std::string(width[c] - r[c].size() + 2, ' ');
    }
    os << "\n";
  };
  line(header);
  std::vector<std::string> rule;
  for (std::size_t w : width) rule.push_back(std::string(w, '-'));
  line(rule);
  for (const auto& r : rows) line(r);
  return os.str();
}

// fn(i) for i in [0, n) on `workers` threads; results are written by index
void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn) {
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto loop = [&] {
    for (std::size_t i; (i = next++) < n;) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < std::min<int>(workers, static_cast<int>(n)); ++w) pool.emplace_back(loop);
  loop();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

json stats_json(const SearchStats& s) {
  return {{"graphs_generated", s.graphs_generated}, {"candidates_tested", s.candidates_tested}, {"pruned", s.pruned}};
}

std::string lines_payload(const std::vector<std::string>& g6) {
  std::string s;
  for (const auto& x : g6) s += x + "\n";
  return s;
}

json census_json(const std::map<std::string, int>& census) {
  json c = json::object();
  for (ObstructionClass k : {ObstructionClass::HeavyNonplanar, ObstructionClass::DisjointCuts,
                             ObstructionClass::MultiCutsGe3, ObstructionClass::ExactlyTwoCuts,
                             ObstructionClass::UniqueCutSplit, ObstructionClass::UniqueCutNosplit}) {
    const auto it = census.find(to_string(k));
    c[to_string(k)] = it == census.end() ? 0 : it->second;
  }
  return c;
}

// ---- commands ----

Outcome do_verify(const std::vector<std::string>& lines, bool minor_check, bool pretty) {
  const CatalogReport r = verify_catalog(lines, minor_check);
  Outcome o;
  std::ostringstream os;
  std::vector<std::vector<std::string>> rows;
  for (const CatalogRow& row : r.rows) {
    const bool ok = row.failure.empty();
    if (pretty) {
      rows.push_back({std::to_string(row.line), row.g6, ok ? "pass" : "fail", std::to_string(row.connectivity),
                      row.label.empty() ? "-" : row.label, row.duplicate ? "duplicate" : row.failure});
    } else {
      json j = {{"line", row.line},           {"g6", row.g6},     {"canonical", row.canon_g6},
                {"status", ok ? "pass" : "fail"}, {"connectivity", row.connectivity},
                {"label", row.label},          {"duplicate", row.duplicate}};
      if (!ok) j["failure"] = row.failure;
      os << j.dump() << "\n";
    }
  }
  const json census = census_json(r.census);
  if (pretty) {
    os << table({"line", "g6", "status", "conn", "label", "note"}, rows) << "\n";
    std::vector<std::vector<std::string>> crow;
    for (const auto& [k, v] : census.items()) crow.push_back({k, std::to_string(v.get<int>())});
    os << table({"class", "count"}, crow);
    os << "passed " << r.passed << ", failed " << r.failed << ", duplicates " << r.duplicates << ", minor violations "
       << r.minor_violations.size() << "\n";
  } else {
    os << json{{"summary",
                {{"passed", r.passed},
                 {"failed", r.failed},
                 {"duplicates", r.duplicates},
                 {"minor_violations", r.minor_violations}}},
               {"census", census}}
              .dump()
       << "\n";
  }
  o.payload = os.str();
  o.stats = {{"passed", r.passed}, {"failed", r.failed}, {"duplicates", r.duplicates}};
  o.exit_code = r.failed == 0 && r.minor_violations.empty() ? kOk : kDomainFailure;
  return o;
}

Outcome do_classify(const std::vector<std::string>& lines, HeavyRule rule, bool pretty) {
  ClassifyOptions opt;
  opt.heavy_rule = rule;
  Outcome o;
  std::ostringstream os;
  std::map<std::string, int> census;
  std::vector<std::vector<std::string>> rows;
  int failed = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const int line = static_cast<int>(i) + 1;
    try {
      const Class5 c = classify(decode_graph6(lines[i]), opt);
      ++census[to_string(c.label)];
      if (pretty) {
        rows.push_back({std::to_string(line), lines[i], to_string(c.label),
                        "{" + std::to_string(c.cut.a) + "," + std::to_string(c.cut.b) + "}",
                        std::to_string(c.cut.weight), to_string(c.cut.light_aug_kind), std::to_string(c.two_cut_count)});
      } else {
        os << json{{"line", line},
                   {"g6", lines[i]},
                   {"label", to_string(c.label)},
                   {"cut", {c.cut.a, c.cut.b}},
                   {"weight", c.cut.weight},
                   {"light_kind", to_string(c.cut.light_aug_kind)},
                   {"two_cuts", c.two_cut_count},
                   {"basic_cuts", c.basic.size()},
                   {"basic_cuts_agree", c.basic_cuts_agree}}
                  .dump()
           << "\n";
      }
    } catch (const Error& e) {
      ++failed;
      if (pretty) {
        rows.push_back({std::to_string(line), lines[i], error_name(e), "-", "-", "-", "-"});
      } else {
        os << json{{"line", line}, {"g6", lines[i]}, {"error", error_name(e)}, {"message", e.what()}}.dump() << "\n";
      }
    }
  }
  const json c = census_json(census);
  if (pretty) {
    os << table({"line", "g6", "label", "cut", "weight", "light", "2-cuts"}, rows) << "\n";
    std::vector<std::vector<std::string>> crow;
    for (const auto& [k, v] : c.items()) crow.push_back({k, std::to_string(v.get<int>())});
    os << table({"class", "count"}, crow);
  } else {
    os << json{{"census", c}, {"classified", static_cast<int>(lines.size()) - failed}, {"failed", failed}}.dump()
       << "\n";
  }
  o.payload = os.str();
  o.stats = {{"classified", static_cast<int>(lines.size()) - failed}, {"failed", failed}};
  o.exit_code = failed == 0 ? kOk : kDomainFailure;
  return o;
}

Outcome do_audit(const std::vector<std::string>& lines, const AuditOptions& opt, int workers, bool pretty) {
  std::vector<Graph> graphs;
  for (const auto& l : lines) graphs.push_back(decode_graph6(l));
  std::vector<AuditReport> reports(graphs.size());
  parallel_for(graphs.size(), workers, [&](std::size_t i) { reports[i] = audit_graph(graphs[i], opt); });

  std::map<std::string, std::array<int, 3>> by_check;
  int fails = 0;
  std::ostringstream os;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    for (const AuditRow& row : reports[i].rows) {
      ++by_check[row.check][static_cast<int>(row.status)];
      fails += row.status == AuditStatus::Fail;
      if (!pretty) {
        os << json{{"line", i + 1},
                   {"graph", reports[i].graph_id},
                   {"check", row.check},
                   {"status", to_string(row.status)},
                   {"evidence", row.evidence}}
                  .dump()
           << "\n";
      }
    }
  }
  std::vector<std::vector<std::string>> rows;
  json summary = json::object();
  for (const std::string& name : audit_check_names()) {
    const auto& c = by_check[name];
    rows.push_back({name, std::to_string(c[0]), std::to_string(c[1]), std::to_string(c[2])});
    summary[name] = {{"pass", c[0]}, {"fail", c[1]}, {"truncated", c[2]}};
  }
  if (pretty) {
    os << table({"check", "pass", "fail", "truncated"}, rows);
  } else {
    os << json{{"summary", summary}, {"graphs", reports.size()}, {"fail_rows", fails}}.dump() << "\n";
  }
  Outcome o;
  o.payload = os.str();
  o.stats = {{"graphs", reports.size()}, {"fail_rows", fails}};
  o.exit_code = fails == 0 ? kOk : kDomainFailure;
  return o;
}

Outcome search_outcome(const SearchResult& r) {
  Outcome o;
  o.payload = lines_payload(r.obstructions);
  o.stats = stats_json(r.stats);
  o.stats["obstructions"] = r.obstructions.size();
  return o;
}

Outcome do_gen_planar(int lo, int hi, PlanarFamily family, bool count_only, int workers, bool pretty) {
  Outcome o;
  if (count_only) {
    std::uint64_t total = 0;
    json per = json::object();
    std::vector<std::vector<std::string>> rows;
    for (int n = lo; n <= hi; ++n) {
      const std::uint64_t c = count_planar(family, n, workers);
      per[std::to_string(n)] = c;
      rows.push_back({std::to_string(n), std::to_string(c)});
      total += c;
    }
    const std::string fam = family == PlanarFamily::All ? "all" : "connected";
    if (pretty) {
      rows.push_back({"total", std::to_string(total)});
      o.payload = table({"n", fam}, rows);
    } else {
      o.payload = json{{"family", fam}, {"per_order", per}, {"total", total}}.dump() + "\n";
    }
    o.stats = {{"total", total}};
    return o;
  }
  std::uint64_t total = 0;
  for (int n = lo; n <= hi; ++n) {
    auto sink = [&](const Graph& g) {
      o.payload += encode_graph6(g) + "\n";
      ++total;
    };
    family == PlanarFamily::All ? generate_planar(n, sink) : generate_connected_planar(n, sink);
  }
  o.stats = {{"total", total}};
  return o;
}

std::string catalog_show(const std::string& name) {
  for (const std::string& p : minor_pattern_names())
    if (p == name) return encode_graph6(minor_pattern(p)) + "\n";
  try {
    return lines_payload(figure_block(figure_from_string(name)));
  } catch (const Error&) {
    throw UsageError("unknown catalog name '" + name + "'");
  }
}

std::string catalog_list() {
  std::string s;
  for (Figure f : all_figures()) s += to_string(f) + "\t" + std::to_string(expected_block_size(f)) + "\n";
  for (const std::string& p : minor_pattern_names()) s += p + "\tpattern\n";
  return s;
}

// ---- driver ----

std::string read_stream(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return read_stream(in);
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open input '" + path + "'");
  return read_stream(f);
}

void write_output(const fs::path& path, const std::string& bytes) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw UsageError("cannot write output '" + path.string() + "'");
  f << bytes;
}

int execute(const Job& job, const Globals& g, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  RunManifest m;
  m.command = job.command;
  m.config = job.config;
  m.config["pretty"] = g.pretty;
  m.runtime = job.runtime;
  m.tool_version = APEXKIT_VERSION;

  std::vector<std::string> lines;
  std::string input_digest;
  if (!job.input_path.empty()) {
    const std::string bytes = read_input(job.input_path, in);
    std::istringstream ss(bytes);
    lines = read_graph6_lines(ss);
    if (lines.empty()) throw UsageError("input '" + job.input_path + "' holds no graphs");
    input_digest = sha256_hex(bytes);
    m.inputs.push_back({job.input_path, input_digest});
  }
  if (!job.source_path.empty()) {
    std::error_code ec;
    if (!fs::exists(job.source_path, ec)) throw UsageError("cannot open source '" + job.source_path + "'");
    const std::string d = sha256_file(job.source_path);
    input_digest += d;
    m.inputs.push_back({job.source_path, d});
  }

  std::optional<ResultCache> cache;
  if (!g.cache.empty() && !g.no_cache) cache.emplace(g.cache);
  const std::string key = cache ? ResultCache::key(job.command, m.config, input_digest) : "";

  Outcome o;
  std::optional<ResultCache::Entry> hit = cache ? cache->load(key) : std::nullopt;
  if (hit) {
    o.payload = hit->payload;
    o.exit_code = hit->manifest.exit_code;
    o.stats = hit->manifest.stats;
    m.cache = "hit";
  } else {
    o = job.run(lines);
    m.cache = cache ? "miss" : "off";
  }
  m.exit_code = o.exit_code;
  m.stats = o.stats;
  m.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (cache && !hit) {
    RunManifest stored = m;
    stored.cache = "off";
    cache->store(key, o.payload, stored);
  }

  if (g.output.empty()) {
    out << o.payload;
  } else {
    write_output(g.output, o.payload);
    m.outputs.push_back({g.output, sha256_hex(o.payload)});
    write_output(g.output + ".manifest.json", m.to_json().dump(2) + "\n");
  }
  if (!o.stats.empty()) err << json{{"stats", o.stats}, {"cache", m.cache}}.dump() << "\n";
  return o.exit_code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"apexkit: minor-minimal non-apex graphs of connectivity two"};
  app.name("apexkit");
  app.require_subcommand(1);
  app.set_version_flag("--version", APEXKIT_VERSION);
  app.fallthrough();

  Globals g;
  app.add_flag("--pretty", g.pretty, "Aligned text tables instead of JSON-lines");
  app.add_option("-o,--output", g.output, "Write the payload here, plus <output>.manifest.json");
  app.add_option("--cache", g.cache, "Result cache directory")->envname("APEXKIT_CACHE");
  app.add_flag("--no-cache", g.no_cache, "Ignore the result cache");

  Job job;
  std::string input = "-";
  int workers = 1;
  auto add_workers = [&](CLI::App* sub) {
    sub->add_option("--workers", workers, "Worker threads")->envname("APEXKIT_WORKERS")->check(CLI::PositiveNumber);
  };

  // verify
  bool no_minor_check = false;
  CLI::App* verify = app.add_subcommand("verify", "Check each graph6 line is a connectivity-2 obstruction");
  verify->add_option("input", input, "graph6 file, '-' for stdin");
  verify->add_flag("--no-minor-check", no_minor_check, "Skip the pairwise minor check");
  verify->callback([&] {
    job.command = "verify";
    job.input_path = input;
    job.config = {{"minor_check", !no_minor_check}};
    job.run = [&](const auto& lines) { return do_verify(lines, !no_minor_check, g.pretty); };
  });

  // classify
  std::string heavy_rule = "basic-cut";
  CLI::App* cls = app.add_subcommand("classify", "Five-way structural classification");
  cls->add_option("input", input, "graph6 file, '-' for stdin");
  cls->add_option("--heavy-rule", heavy_rule, "basic-cut or any-cut")
      ->check(CLI::IsMember({"basic-cut", "any-cut"}));
  cls->callback([&] {
    job.command = "classify";
    job.input_path = input;
    job.config = {{"heavy_rule", heavy_rule}};
    const HeavyRule rule = heavy_rule == "any-cut" ? HeavyRule::AnyCut : HeavyRule::BasicCut;
    job.run = [&, rule](const auto& lines) { return do_classify(lines, rule, g.pretty); };
  });

  // audit
  AuditOptions audit_opt;
  CLI::App* aud = app.add_subcommand("audit", "Structural audit matrix");
  aud->add_option("input", input, "graph6 file, '-' for stdin");
  aud->add_option("--cap", audit_opt.cap, "Kuratowski enumeration cap per vertex")->check(CLI::PositiveNumber);
  aud->add_option("--samples", audit_opt.triple_samples, "Sampled witness triples");
  aud->add_option("--seed", audit_opt.seed, "Sampling seed");
  add_workers(aud);
  aud->callback([&] {
    job.command = "audit";
    job.input_path = input;
    job.config = {{"cap", audit_opt.cap}, {"samples", audit_opt.triple_samples}, {"seed", audit_opt.seed}};
    job.runtime = {{"workers", workers}};
    job.run = [&](const auto& lines) { return do_audit(lines, audit_opt, workers, g.pretty); };
  });

  // search
  CLI::App* search = app.add_subcommand("search", "Exhaustive searches");
  search->require_subcommand(1);

  SearchConfig cfg;
  std::string heavy_range = "5..9";
  std::vector<std::string> light{"K5", "K33", "K33e"};
  bool no_symmetry = false;
  bool progress = false;
  CLI::App* uc = search->add_subcommand("unique-cut", "Glue planar heavy sides to Kuratowski light sides");
  uc->add_option("--heavy", heavy_range, "Heavy side orders A..B");
  uc->add_option("--light", light, "Light kinds")->delimiter(',');
  uc->add_option("--min-attach", cfg.min_attach_degree, "Minimum attachment degree of a and b");
  uc->add_option("--checkpoint", cfg.checkpoint, "Resume file");
  uc->add_option("--source", cfg.source, "graph6 file of heavy sides instead of the generator");
  uc->add_flag("--no-symmetry", no_symmetry, "Disable the Aut(H) and swap reduction");
  uc->add_flag("--progress", progress, "Report finished units on stderr");
  add_workers(uc);
  uc->callback([&] {
    std::tie(cfg.heavy_min, cfg.heavy_max) = parse_range(heavy_range);
    cfg.light_kinds.clear();
    for (const auto& l : light) cfg.light_kinds.push_back(parse_light(l));
    cfg.symmetry = !no_symmetry;
    cfg.workers = workers;
    if (progress) {
      cfg.progress = [&err](std::size_t done, std::size_t total) {
        err << "progress " << done << "/" << total << "\n" << std::flush;
      };
    }
    validate(cfg);
    job.command = "search unique-cut";
    job.config = {{"heavy", {cfg.heavy_min, cfg.heavy_max}},
                  {"light", light},
                  {"min_attach", cfg.min_attach_degree},
                  {"symmetry", cfg.symmetry},
                  {"source", !cfg.source.empty()}};
    job.runtime = {{"workers", workers}, {"checkpoint", cfg.checkpoint}};
    job.source_path = cfg.source;
    job.run = [&](const auto&) { return search_outcome(unique_cut_search(cfg)); };
  });

  bool unfiltered = false;
  CLI::App* hn = search->add_subcommand("heavy-nonplanar", "Kuratowski heavy side with Kuratowski light side");
  hn->add_flag("--unfiltered", unfiltered, "Skip the obstruction filter");
  hn->callback([&] {
    job.command = "search heavy-nonplanar";
    job.config = {{"filter", !unfiltered}};
    job.run = [&](const auto&) { return search_outcome(heavy_nonplanar_search(!unfiltered)); };
  });

  int max_order = 12;
  CLI::App* dis = search->add_subcommand("disconnected", "Disjoint unions of two Kuratowski graphs");
  dis->add_option("--max-order", max_order, "Largest order considered");
  dis->callback([&] {
    job.command = "search disconnected";
    job.config = {{"max_order", max_order}};
    job.run = [&](const auto&) { return search_outcome(disconnected_search(max_order)); };
  });

  std::string order_range = "5..9";
  bool count_only = false;
  bool all_planar = false;
  CLI::App* gp = search->add_subcommand("gen-planar", "Non-isomorphic planar graphs");
  gp->add_option("-n", order_range, "Orders A..B");
  gp->add_flag("--count-only", count_only, "Print counts instead of graphs");
  gp->add_flag("--all", all_planar, "Include disconnected graphs");
  add_workers(gp);
  gp->callback([&] {
    const auto [lo, hi] = parse_range(order_range);
    if (lo < 1 || hi > 12 || lo > hi) throw ConfigInvalid("order range must lie in 1..12");
    job.command = "search gen-planar";
    job.config = {{"n", {lo, hi}}, {"count_only", count_only}, {"all", all_planar}};
    job.runtime = {{"workers", workers}};
    const PlanarFamily fam = all_planar ? PlanarFamily::All : PlanarFamily::Connected;
    job.run = [&, lo, hi, fam](const auto&) { return do_gen_planar(lo, hi, fam, count_only, workers, g.pretty); };
  });

  // catalog
  CLI::App* cat = app.add_subcommand("catalog", "Embedded appendix blocks and minor patterns");
  cat->require_subcommand(1);
  std::string name;
  CLI::App* show = cat->add_subcommand("show", "Print a pattern or figure block as graph6");
  show->add_option("name", name, "Pattern or figure name")->required();
  show->callback([&] {
    job.command = "catalog show";
    job.config = {{"name", name}};
    const std::string payload = catalog_show(name);
    job.run = [payload](const auto&) { return Outcome{payload, json::object(), kOk}; };
  });
  std::string figure = "all";
  CLI::App* exp = cat->add_subcommand("export", "Print appendix blocks as graph6");
  exp->add_option("--figure", figure, "Figure name or 'all'");
  exp->callback([&] {
    job.command = "catalog export";
    job.config = {{"figure", figure}};
    std::vector<std::string> out_lines;
    if (figure == "all") {
      for (const auto& e : load_catalog()) out_lines.push_back(e.g6);
    } else {
      try {
        out_lines = figure_block(figure_from_string(figure));
      } catch (const Error&) {
        throw UsageError("unknown figure '" + figure + "'");
      }
    }
    const std::string payload = lines_payload(out_lines);
    job.run = [payload](const auto&) { return Outcome{payload, json::object(), kOk}; };
  });
  CLI::App* list = cat->add_subcommand("list", "Names accepted by show");
  list->callback([&] {
    job.command = "catalog list";
    job.run = [](const auto&) { return Outcome{catalog_list(), json::object(), kOk}; };
  });

  // check-manifest
  std::string manifest_path;
  CLI::App* chk = app.add_subcommand("check-manifest", "Recompute the digests recorded in a manifest");
  chk->add_option("manifest", manifest_path, "Manifest file")->required();

  std::vector<std::string> argv_store{"apexkit"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  } catch (const UsageError& e) {
    err << json{{"error", "Usage"}, {"message", e.what()}}.dump() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << json{{"error", error_name(e)}, {"message", e.what()}}.dump() << "\n";
    return kUsage;
  }

  try {
    if (chk->parsed()) {
      std::ifstream f(manifest_path);
      if (!f) throw UsageError("cannot open manifest '" + manifest_path + "'");
      const auto bad = verify_manifest(RunManifest::from_json(json::parse(f)));
      for (const auto& b : bad) err << b << "\n";
      out << json{{"manifest", manifest_path}, {"ok", bad.empty()}}.dump() << "\n";
      return bad.empty() ? kOk : kDomainFailure;
    }
    return execute(job, g, in, out, err);
  } catch (const UsageError& e) {
    err << json{{"error", "Usage"}, {"message", e.what()}}.dump() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << json{{"error", error_name(e)}, {"message", e.what()}}.dump() << "\n";
    return kDomainFailure;
  } catch (const json::exception& e) {
    err << json{{"error", "Json"}, {"message", e.what()}}.dump() << "\n";
    return kUsage;
  }
}

}  // namespace apexkit::cli
