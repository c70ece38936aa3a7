#include "apexkit/search.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "apexkit/apex.hpp"
#include "apexkit/canon.hpp"
#include "apexkit/connectivity.hpp"
#include "apexkit/errors.hpp"
#include "apexkit/generate.hpp"
#include "apexkit/graph6.hpp"
#include "apexkit/minors.hpp"
#include "apexkit/planarity.hpp"

namespace apexkit {

SearchStats& SearchStats::operator+=(const SearchStats& o) {
  graphs_generated += o.graphs_generated;
  candidates_tested += o.candidates_tested;
  for (const auto& [k, v] : o.pruned) pruned[k] += v;
  return *this;
}

void validate(const SearchConfig& cfg) {
  if (cfg.heavy_min < 4 || cfg.heavy_max > 12 || cfg.heavy_min > cfg.heavy_max) {
    throw ConfigInvalid("heavy order range must lie within 4..12, got " + std::to_string(cfg.heavy_min) + ".." +
                        std::to_string(cfg.heavy_max));
  }
  if (cfg.min_attach_degree < 1) throw ConfigInvalid("min attach degree must be at least 1");
  if (cfg.light_kinds.empty()) throw ConfigInvalid("no light kinds selected");
  for (LightKind k : cfg.light_kinds) {
    if (k == LightKind::Other) throw ConfigInvalid("light kind must be K5, K33 or K33e");
  }
  if (cfg.workers < 1) throw ConfigInvalid("workers must be at least 1");
  if (!cfg.source.empty() && !std::filesystem::exists(cfg.source)) throw ConfigInvalid("source file not found: " + cfg.source);
}

std::string fingerprint(const SearchConfig& cfg) {
  std::set<LightKind> kinds(cfg.light_kinds.begin(), cfg.light_kinds.end());
  std::string light;
  for (LightKind k : kinds) light += (light.empty() ? "" : ",") + to_string(k);
  return "unique-cut heavy=" + std::to_string(cfg.heavy_min) + ".." + std::to_string(cfg.heavy_max) + " light=" + light +
         " attach=" + std::to_string(cfg.min_attach_degree) + " symmetry=" + (cfg.symmetry ? "1" : "0") +
         " source=" + (cfg.source.empty() ? "internal" : cfg.source);
}

// ---------------------------------------------------------------- light sides

namespace {

LightVariant make_variant(LightKind kind, std::string name, const Graph& plus, int a, int b) {
  LightVariant v;
  v.kind = kind;
  v.name = std::move(name);
  const VertexSet rest = plus.vertices() & ~bit(a) & ~bit(b);
  v.light = plus.induced(rest);
  int idx = 0;
  for_each_vertex(rest, [&](int u) {
    if (plus.has_edge(u, a)) v.to_a |= bit(idx);
    if (plus.has_edge(u, b)) v.to_b |= bit(idx);
    ++idx;
  });
  return v;
}

}  // namespace

std::vector<LightVariant> light_variants(const std::vector<LightKind>& kinds) {
  const std::set<LightKind> want(kinds.begin(), kinds.end());
  std::vector<LightVariant> out;
  if (want.count(LightKind::K5)) out.push_back(make_variant(LightKind::K5, "K5", Graph::complete(5), 0, 1));
  // parts {0,1,2} and {3,4,5}
  const Graph k33 = Graph::complete_bipartite(3, 3);
  if (want.count(LightKind::K33)) out.push_back(make_variant(LightKind::K33, "K33", k33, 0, 3));
  if (want.count(LightKind::K33e)) {
    Graph k33e = k33;
    k33e.add_edge(0, 1);
    // extra edge itself; K33 edge at an end of the extra edge (both ways);
    // K33 edge at the third vertex of that side (both ways)
    out.push_back(make_variant(LightKind::K33e, "K33e:extra", k33e, 0, 1));
    out.push_back(make_variant(LightKind::K33e, "K33e:end-a", k33e, 0, 3));
    out.push_back(make_variant(LightKind::K33e, "K33e:end-b", k33e, 3, 0));
    out.push_back(make_variant(LightKind::K33e, "K33e:far-a", k33e, 2, 3));
    out.push_back(make_variant(LightKind::K33e, "K33e:far-b", k33e, 3, 2));
  }
  return out;
}

Graph glue(const Graph& h, VertexSet na, VertexSet nb, const LightVariant& light) {
  const int k = h.order();
  const int a = k, b = k + 1, base = k + 2;
  Graph g(base + light.light.order());
  for (const Edge& e : h.edges()) g.add_edge(e.u, e.v);
  for_each_vertex(na, [&](int v) { g.add_edge(a, v); });
  for_each_vertex(nb, [&](int v) { g.add_edge(b, v); });
  for (const Edge& e : light.light.edges()) g.add_edge(base + e.u, base + e.v);
  for_each_vertex(light.to_a, [&](int v) { g.add_edge(a, base + v); });
  for_each_vertex(light.to_b, [&](int v) { g.add_edge(b, base + v); });
  return g;
}

// ---------------------------------------------------------------- pruning rules

namespace {

struct SetCounts {
  std::uint64_t small = 0;
  std::uint64_t planar = 0;
  std::uint64_t inessential = 0;
};

std::vector<VertexSet> admissible_impl(const Graph& h, int min_attach, SetCounts* counts) {
  const int k = h.order();
  const std::size_t total = std::size_t{1} << k;
  std::vector<VertexSet> order(total);
  for (std::size_t s = 0; s < total; ++s) order[s] = s;
  std::stable_sort(order.begin(), order.end(), [](VertexSet x, VertexSet y) { return popcount(x) < popcount(y); });

  // 1 planar, 0 non-planar
  std::vector<char> planar(total, 1);
  std::vector<VertexSet> out;
  for (VertexSet s : order) {
    bool below_nonplanar = false;
    for_each_vertex(s, [&](int x) { below_nonplanar |= !planar[s & ~bit(x)]; });
    if (below_nonplanar) {
      planar[s] = 0;
      if (counts) ++counts->inessential;
      continue;
    }
    planar[s] = is_planar(h.with_vertex(s));
    if (planar[s]) {
      if (counts) ++counts->planar;
      continue;
    }
    if (popcount(s) < min_attach) {
      if (counts) ++counts->small;
      continue;
    }
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// deletion and contraction masks for one attachment set S on heavy side h
struct SetMasks {
  std::uint32_t del = 0;   // edges e of h with (h - e) + S non-planar
  std::uint32_t con = 0;   // edges e of h with (h / e) + S non-planar
  VertexSet minus = 0;     // x with (h - x) + S non-planar
  VertexSet star = 0;      // x in S with h + {xy : y in S} non-planar
};

Graph merge_keep(const Graph& g, int u, int v) {
  Graph m = g;
  for_each_vertex(g.neighbors(v), [&](int x) {
    if (x != u) m.add_edge(u, x);
  });
  return m.isolate(v);
}

SetMasks masks_for(const Graph& h, const std::vector<Edge>& edges, VertexSet s) {
  SetMasks m;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (!is_planar(h.without_edge(e.u, e.v).with_vertex(s))) m.del |= std::uint32_t{1} << i;
    VertexSet image = s;
    if (contains(image, e.v)) image = (image & ~bit(e.v)) | bit(e.u);
    if (!is_planar(merge_keep(h, e.u, e.v).with_vertex(image))) m.con |= std::uint32_t{1} << i;
  }
  for (int x = 0; x < h.order(); ++x) {
    if (!is_planar(h.isolate(x).with_vertex(s & ~bit(x)))) m.minus |= bit(x);
  }
  for_each_vertex(s, [&](int x) {
    Graph st = h;
    for_each_vertex(s & ~bit(x), [&](int y) { st.add_edge(x, y); });
    if (!is_planar(st)) m.star |= bit(x);
  });
  return m;
}

std::optional<std::string> pair_rule(const Graph& h, VertexSet na, VertexSet nb, const SetMasks& ma, const SetMasks& mb) {
  for (int v = 0; v < h.order(); ++v) {
    if (h.degree(v) + contains(na, v) + contains(nb, v) < 3) return "min_degree";
  }
  if (ma.del & mb.del) return "basic_delete";
  if ((ma.con & mb.con) || (ma.star & mb.minus) || (mb.star & ma.minus)) return "basic_contract";
  return std::nullopt;
}

}  // namespace

std::vector<VertexSet> admissible_attachments(const Graph& h, int min_attach) {
  if (h.edges().size() > 32) throw Error("heavy side has too many edges");
  return admissible_impl(h, min_attach, nullptr);
}

std::optional<std::string> pair_rejection(const Graph& h, VertexSet na, VertexSet nb) {
  const auto edges = h.edges();
  if (edges.size() > 32) throw Error("heavy side has too many edges");
  return pair_rule(h, na, nb, masks_for(h, edges, na), masks_for(h, edges, nb));
}

std::optional<std::string> glued_rejection(const Graph& g) {
  if (connectivity(g) != 2) return "connectivity";
  if (enumerate_two_cuts(g).size() != 1) return "cut_not_unique";
  if (obstruction_failure(g)) return "not_obstruction";
  return std::nullopt;
}

// ---------------------------------------------------------------- unique-cut search

namespace {

struct UnitOutcome {
  std::vector<std::string> found;
  SearchStats stats;
};

void process_heavy(const Graph& h, const SearchConfig& cfg, const std::vector<LightVariant>& lights, UnitOutcome& out,
                   std::set<std::string>& found) {
  SearchStats& st = out.stats;
  ++st.graphs_generated;
  SetCounts sc;
  const std::vector<VertexSet> sets = admissible_impl(h, cfg.min_attach_degree, &sc);
  st.pruned["attach_planar"] += sc.planar;
  st.pruned["attach_inessential"] += sc.inessential;
  st.pruned["attach_small"] += sc.small;
  if (sets.empty()) return;

  const auto edges = h.edges();
  std::vector<std::optional<SetMasks>> masks(sets.size());
  auto mask = [&](std::size_t i) -> const SetMasks& {
    if (!masks[i]) masks[i] = masks_for(h, edges, sets[i]);
    return *masks[i];
  };

  std::optional<std::vector<Permutation>> group;
  if (cfg.symmetry) {
    const Labeling lab = canonical_labeling(h);
    group = enumerate_group(lab.generators, h.order(), 50000);
  }
  auto image = [](const Permutation& p, VertexSet s) {
    VertexSet r = 0;
    for_each_vertex(s, [&](int v) { r |= bit(p[v]); });
    return r;
  };

  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i; j < sets.size(); ++j) {
      const VertexSet na = sets[i], nb = sets[j];
      if (group) {
        bool smaller = false;
        for (const Permutation& p : *group) {
          VertexSet x = image(p, na), y = image(p, nb);
          if (x > y) std::swap(x, y);
          if (std::pair{x, y} < std::pair{na, nb}) {
            smaller = true;
            break;
          }
        }
        if (smaller) {
          ++st.pruned["symmetry"];
          continue;
        }
      }
      if (auto why = pair_rule(h, na, nb, mask(i), mask(j))) {
        ++st.pruned[*why];
        continue;
      }
      for (const LightVariant& light : lights) {
        const Graph g = glue(h, na, nb, light);
        ++st.candidates_tested;
        if (auto why = glued_rejection(g)) {
          ++st.pruned[*why];
          continue;
        }
        found.insert(canonical_g6(g));
      }
    }
  }
}

struct Unit {
  std::string id;
  std::function<void(const GraphSink&)> heavy;  // feeds the unit's heavy sides
};

std::vector<Unit> make_units(const SearchConfig& cfg, SearchStats& rejected) {
  std::vector<Unit> units;
  if (cfg.source.empty()) {
    for (int k = cfg.heavy_min; k <= cfg.heavy_max; ++k) {
      auto roots = std::make_shared<std::vector<Graph>>(generation_units(PlanarFamily::Connected, k));
      for (std::size_t i = 0; i < roots->size(); ++i) {
        units.push_back({"k" + std::to_string(k) + "u" + std::to_string(i), [roots, i, k](const GraphSink& sink) {
                           expand_unit(PlanarFamily::Connected, (*roots)[i], k, sink);
                         }});
      }
    }
    return units;
  }
  std::ifstream in(cfg.source);
  if (!in) throw ConfigInvalid("cannot read source file: " + cfg.source);
  auto heavy = std::make_shared<std::vector<Graph>>();
  for (const std::string& line : read_graph6_lines(in)) {
    Graph h = decode_graph6(line);
    if (h.order() < cfg.heavy_min || h.order() > cfg.heavy_max || !is_connected(h) || !is_planar(h)) {
      ++rejected.pruned["source_rejected"];
      continue;
    }
    heavy->push_back(std::move(h));
  }
  constexpr std::size_t chunk = 16;
  for (std::size_t start = 0; start < heavy->size(); start += chunk) {
    units.push_back({"f" + std::to_string(start / chunk), [heavy, start](const GraphSink& sink) {
                       for (std::size_t i = start; i < std::min(heavy->size(), start + chunk); ++i) sink((*heavy)[i]);
                     }});
  }
  return units;
}

// checkpoint lines: unit <tab> id <tab> generated <tab> tested <tab> k=v,... <tab> g6 g6 ...
std::string encode_unit(const std::string& id, const UnitOutcome& u) {
  std::string pruned;
  for (const auto& [k, v] : u.stats.pruned) pruned += (pruned.empty() ? "" : ",") + k + "=" + std::to_string(v);
  std::string found;
  for (const auto& g6 : u.found) found += (found.empty() ? "" : " ") + g6;
  return "unit\t" + id + "\t" + std::to_string(u.stats.graphs_generated) + "\t" + std::to_string(u.stats.candidates_tested) +
         "\t" + (pruned.empty() ? "-" : pruned) + "\t" + (found.empty() ? "-" : found);
}

std::map<std::string, UnitOutcome> load_checkpoint(const std::string& path, const std::string& fp) {
  std::map<std::string, UnitOutcome> done;
  std::ifstream in(path);
  if (!in) return done;
  std::string line;
  if (!std::getline(in, line)) return done;
  if (line != "# apexkit checkpoint " + fp) throw ConfigInvalid("checkpoint " + path + " was written for another configuration");
  while (std::getline(in, line)) {
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string part; std::getline(ss, part, '\t');) f.push_back(part);
    if (f.size() != 6 || f[0] != "unit") continue;  // a torn final line is redone
    UnitOutcome u;
    u.stats.graphs_generated = std::stoull(f[2]);
    u.stats.candidates_tested = std::stoull(f[3]);
    if (f[4] != "-") {
      std::stringstream ps(f[4]);
      for (std::string kv; std::getline(ps, kv, ',');) {
        const auto eq = kv.find('=');
        u.stats.pruned[kv.substr(0, eq)] = std::stoull(kv.substr(eq + 1));
      }
    }
    if (f[5] != "-") {
      std::stringstream gs(f[5]);
      for (std::string g6; gs >> g6;) u.found.push_back(g6);
    }
    done[f[1]] = std::move(u);
  }
  return done;
}

}  // namespace

SearchResult unique_cut_search(const SearchConfig& cfg) {
  validate(cfg);
  const std::vector<LightVariant> lights = light_variants(cfg.light_kinds);
  SearchStats base;
  const std::vector<Unit> units = make_units(cfg, base);

  std::map<std::string, UnitOutcome> done;
  std::ofstream ck;
  if (!cfg.checkpoint.empty()) {
    const std::string fp = fingerprint(cfg);
    done = load_checkpoint(cfg.checkpoint, fp);
    const bool fresh = !std::filesystem::exists(cfg.checkpoint) || std::filesystem::file_size(cfg.checkpoint) == 0;
    if (fresh) {
      std::ofstream(cfg.checkpoint) << "# apexkit checkpoint " << fp << "\n";
    } else {
      // drop a torn trailing line so appends start on a fresh line
      std::ifstream in(cfg.checkpoint);
      std::stringstream all;
      all << in.rdbuf();
      std::string text = all.str();
      if (!text.empty() && text.back() != '\n') {
        text.erase(text.rfind('\n') + 1);
        std::ofstream(cfg.checkpoint, std::ios::trunc) << text;
      }
    }
    ck.open(cfg.checkpoint, std::ios::app);
    if (!ck) throw ConfigInvalid("cannot write checkpoint " + cfg.checkpoint);
  }

  std::vector<UnitOutcome> outcomes(units.size());
  std::vector<char> pending(units.size(), 1);
  std::size_t already = 0;
  for (std::size_t i = 0; i < units.size(); ++i) {
    auto it = done.find(units[i].id);
    if (it != done.end()) {
      outcomes[i] = it->second;
      pending[i] = 0;
      ++already;
    }
  }

  std::mutex mu;
  std::atomic<std::size_t> next{0};
  std::size_t finished = already;
  std::exception_ptr failure;
  auto work = [&] {
    for (std::size_t i; (i = next++) < units.size();) {
      if (!pending[i]) continue;
      UnitOutcome out;
      try {
        std::set<std::string> found;
        units[i].heavy([&](const Graph& h) { process_heavy(h, cfg, lights, out, found); });
        out.found.assign(found.begin(), found.end());
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        return;
      }
      std::lock_guard lock(mu);
      if (ck.is_open()) ck << encode_unit(units[i].id, out) << "\n" << std::flush;
      outcomes[i] = std::move(out);
      ++finished;
      if (cfg.progress) cfg.progress(finished, units.size());
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < cfg.workers; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  SearchResult result;
  result.stats = base;
  std::set<std::string> all;
  for (const UnitOutcome& u : outcomes) {
    result.stats += u.stats;
    all.insert(u.found.begin(), u.found.end());
  }
  result.obstructions.assign(all.begin(), all.end());
  return result;
}

// ---------------------------------------------------------------- section-five construction

SearchResult heavy_nonplanar_search(bool filter) {
  std::vector<std::pair<Graph, int>> cores;  // (C, subdividing vertex or -1)
  const Graph k5 = Graph::complete(5);
  const Graph k33 = Graph::complete_bipartite(3, 3);
  cores.emplace_back(k5, -1);
  cores.emplace_back(k33, -1);
  for (const Graph& k : {k5, k33}) {
    // every edge of K5 (or K3,3) is equivalent; subdivide 0-(first neighbour)
    const int u = 0, v = lowest(k.neighbors(0));
    Graph s = k.without_edge(u, v).with_vertex(bit(u) | bit(v));
    cores.emplace_back(s, s.order() - 1);
  }
  const std::vector<LightVariant> lights = light_variants({LightKind::K5, LightKind::K33});

  SearchResult result;
  std::set<std::string> all;
  for (const auto& [c, w] : cores) {
    std::vector<VertexSet> pairs;
    for (int x = 0; x < c.order(); ++x)
      for (int y = x + 1; y < c.order(); ++y) pairs.push_back(bit(x) | bit(y));
    for (VertexSet na : pairs) {
      for (VertexSet nb : pairs) {
        if (w >= 0 && (!contains(na, w) || !contains(nb, w))) continue;
        for (const LightVariant& light : lights) {
          const Graph g = glue(c, na, nb, light);
          ++result.stats.graphs_generated;
          if (filter) {
            ++result.stats.candidates_tested;
            if (obstruction_failure(g)) {
              ++result.stats.pruned["not_obstruction"];
              continue;
            }
          }
          all.insert(canonical_g6(g));
        }
      }
    }
  }
  result.obstructions.assign(all.begin(), all.end());
  return result;
}

SearchResult disconnected_search(int max_order) {
  SearchResult result;
  result.obstructions = disconnected_obstructions(max_order);
  const auto k = kuratowski_graphs(max_order - 5);
  result.stats.graphs_generated = k.size();
  return result;
}

// ---------------------------------------------------------------- catalog verification

CatalogReport verify_catalog(const std::vector<std::string>& lines, bool minor_check) {
  CatalogReport report;
  std::map<std::string, int> first_seen;
  std::vector<Graph> distinct;
  std::vector<int> distinct_row;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    CatalogRow row;
    row.line = static_cast<int>(i) + 1;
    row.g6 = lines[i];
    Graph g(0);
    try {
      g = decode_graph6(lines[i]);
    } catch (const MalformedGraph6& e) {
      throw MalformedGraph6("line " + std::to_string(row.line) + ": " + e.what());
    }
    row.canon_g6 = canonical_g6(g);
    row.connectivity = connectivity(g);
    if (first_seen.count(row.canon_g6)) {
      row.duplicate = true;
      ++report.duplicates;
    } else {
      first_seen[row.canon_g6] = row.line;
    }
    const ObstructionResult ob = is_obstruction(g);
    if (!ob) {
      row.failure = ob.reason;
    } else if (std::string bad = validate_certificate(g, *ob.certificate); !bad.empty()) {
      row.failure = "certificate: " + bad;
    } else if (row.connectivity != 2) {
      row.failure = "connectivity " + std::to_string(row.connectivity);
    } else {
      row.obstruction = true;
    }
    if (row.obstruction) {
      try {
        row.label = to_string(classify(g).label);
      } catch (const Error& e) {
        row.failure = std::string("classify: ") + e.what();
      }
    }
    const bool ok = row.obstruction && !row.label.empty();
    ok ? ++report.passed : ++report.failed;
    if (ok && !row.duplicate) {
      ++report.census[row.label];
      distinct.push_back(g);
      distinct_row.push_back(static_cast<int>(i));
    }
    report.rows.push_back(std::move(row));
  }
  if (minor_check && distinct.size() > 1) {
    for (auto [i, j] : minor_closed_check(distinct).violations) {
      report.minor_violations.emplace_back(distinct_row[i], distinct_row[j]);
    }
  }
  return report;
}

}  // namespace apexkit
