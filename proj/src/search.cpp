// Copyright 2026 The lonelyedge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lonelyedge/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "lonelyedge/canonical.hpp"
#include "lonelyedge/connectivity.hpp"
#include "lonelyedge/constructions.hpp"
#include "lonelyedge/fixtures.hpp"
#include "lonelyedge/formats.hpp"

namespace lonely {
namespace {

int worker_count(int jobs, std::size_t tasks) {
  int n = jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
  n = std::max(1, n);
  return static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(n), std::max<std::size_t>(tasks, 1)));
}

// Applies f to 0..count-1 on a pool of workers; results keep their index.
template <class F>
auto parallel_map(std::size_t count, int jobs, F f) -> std::vector<decltype(f(std::size_t{}))> {
  using R = decltype(f(std::size_t{}));
  std::vector<std::optional<R>> slots(count);
  const int workers = worker_count(jobs, count);
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) slots[i].emplace(f(i));
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            slots[i].emplace(f(i));
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
          }
        }
      });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
  }
  std::vector<R> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

void check_order(int max_n, int cap, bool force, const char* what) {
  if (max_n < 4 || max_n % 2 != 0) {
    throw GraphError(std::string("max_n must be even and at least 4 for ") + what);
  }
  if (max_n > cap && !force) {
    throw CapExceededError(std::string(what) + ": max_n " + std::to_string(max_n) +
                           " exceeds the cap " + std::to_string(cap) + " (use force)");
  }
}

using Candidates = std::vector<std::pair<CanonicalForm, CubicGraph>>;

// Breadth-first by order: children of the previous level are computed in
// parallel, then deduplicated by a single aggregator in parent order.
template <class ChildrenOf>
std::vector<CubicGraph> generate_levels(int max_n, int jobs, ChildrenOf children_of) {
  std::vector<CubicGraph> level{canonical_graph(k4())};
  std::vector<CubicGraph> all = level;
  for (int n = 6; n <= max_n; n += 2) {
    const auto batches = parallel_map(level.size(), jobs, [&](std::size_t i) {
      Candidates out;
      for (auto& child : children_of(level[i])) {
        auto form = canonical_form(child);
        out.emplace_back(std::move(form), std::move(child));
      }
      return out;
    });
    std::map<CanonicalForm, CubicGraph> seen;
    for (const auto& batch : batches) {
      for (const auto& [form, graph] : batch) {
        if (!seen.contains(form)) seen.emplace(form, canonical_graph(graph));
      }
    }
    level.clear();
    for (auto& [form, graph] : seen) level.push_back(std::move(graph));
    all.insert(all.end(), level.begin(), level.end());
  }
  return all;
}

// Perfect matchings as sorted edge-id sets, by trying every subset of n/2
// edges.
std::set<std::vector<EdgeId>> subset_matchings(const CubicGraph& g) {
  std::set<std::vector<EdgeId>> out;
  const int m = g.size();
  const int half = g.order() / 2;
  std::vector<EdgeId> chosen;
  std::vector<char> covered(g.order(), 0);
  auto rec = [&](auto&& self, EdgeId from) -> void {
    if (static_cast<int>(chosen.size()) == half) {
      out.insert(chosen);
      return;
    }
    for (EdgeId e = from; e < m; ++e) {
      const auto& ed = g.edge(e);
      if (covered[ed.u] || covered[ed.v]) continue;
      covered[ed.u] = covered[ed.v] = 1;
      chosen.push_back(e);
      self(self, e + 1);
      chosen.pop_back();
      covered[ed.u] = covered[ed.v] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

// Isomorphism by backtracking over vertex bijections with multiplicity
// consistency checks.
bool permutation_isomorphic(const CubicGraph& a, const CubicGraph& b) {
  if (a.order() != b.order()) return false;
  const int n = a.order();
  std::vector<Vertex> image(n, -1);
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, Vertex v) -> bool {
    if (v == n) return true;
    for (Vertex w = 0; w < n; ++w) {
      if (used[w]) continue;
      bool ok = true;
      for (Vertex u = 0; u < v && ok; ++u) {
        ok = a.multiplicity(u, v) == b.multiplicity(image[u], w);
      }
      if (!ok) continue;
      image[v] = w;
      used[w] = 1;
      if (self(self, v + 1)) return true;
      used[w] = 0;
    }
    image[v] = -1;
    return false;
  };
  return rec(rec, 0);
}

CubicGraph relabel(const CubicGraph& g, const std::vector<Vertex>& perm) {
  std::vector<CubicGraph::Pair> pairs;
  for (const auto& e : g.edges()) pairs.emplace_back(perm[e.u], perm[e.v]);
  return CubicGraph::from_adjacency(g.order(), pairs);
}

std::string join_codes(const std::vector<std::string>& codes) {
  std::string out;
  for (const auto& c : codes) out += (out.empty() ? "" : ", ") + c;
  return out.empty() ? "none" : out;
}

bool same_classes(const std::vector<CubicGraph>& got, const std::vector<CubicGraph>& want) {
  std::multiset<CanonicalForm> a, b;
  for (const auto& g : got) a.insert(canonical_form(g));
  for (const auto& g : want) b.insert(canonical_form(g));
  return a == b;
}

std::vector<CubicGraph> graphs_of(const std::vector<const CensusEntry*>& entries, int n) {
  std::vector<CubicGraph> out;
  for (const auto* e : entries) {
    if (n == 0 || e->graph.order() == n) out.push_back(e->graph);
  }
  return out;
}

std::vector<std::string> codes_of(const std::vector<const CensusEntry*>& entries, int n = 0) {
  std::vector<std::string> out;
  for (const auto* e : entries) {
    if (n == 0 || e->graph.order() == n) out.push_back(e->code);
  }
  return out;
}

}  // namespace

CubicGraph insert_edge(const CubicGraph& g, EdgeId e, EdgeId f) {
  if (e == f) throw GraphError("edge insertion needs two distinct edges");
  const Vertex a = g.order(), b = g.order() + 1;
  std::vector<CubicGraph::Pair> pairs;
  for (EdgeId x = 0; x < g.size(); ++x) {
    const auto& ed = g.edge(x);
    if (x == e) {
      pairs.emplace_back(ed.u, a);
      pairs.emplace_back(a, ed.v);
    } else if (x == f) {
      pairs.emplace_back(ed.u, b);
      pairs.emplace_back(b, ed.v);
    } else {
      pairs.emplace_back(ed.u, ed.v);
    }
  }
  pairs.emplace_back(a, b);
  return CubicGraph::from_adjacency(g.order() + 2, pairs);
}

std::vector<CubicGraph> generate_cubic_3connected(int max_n, const GenerationOptions& opts) {
  check_order(max_n, kCapThreeConnected, opts.force, "generate_cubic_3connected");
  return generate_levels(max_n, opts.jobs, [](const CubicGraph& g) {
    std::vector<CubicGraph> out;
    for (EdgeId e = 0; e < g.size(); ++e) {
      for (EdgeId f = e + 1; f < g.size(); ++f) {
        auto h = insert_edge(g, e, f);
        if (is_three_connected(h)) out.push_back(std::move(h));
      }
    }
    return out;
  });
}

std::vector<CubicGraph> generate_klee(int max_n, const GenerationOptions& opts) {
  check_order(max_n, kCapKlee, opts.force, "generate_klee");
  return generate_levels(max_n, opts.jobs, [](const CubicGraph& g) {
    std::vector<CubicGraph> out;
    for (Vertex v = 0; v < g.order(); ++v) out.push_back(expand(g, v).graph);
    return out;
  });
}

const char* to_string(SearchMode m) {
  switch (m) {
    case SearchMode::kAll3Connected: return "all_3connected";
    case SearchMode::kKleeOnly: return "klee_only";
    case SearchMode::kIngestGraph6: return "ingest_graph6";
  }
  return "?";
}

SearchMode parse_search_mode(std::string_view s) {
  if (s == "all_3connected") return SearchMode::kAll3Connected;
  if (s == "klee_only") return SearchMode::kKleeOnly;
  if (s == "ingest_graph6") return SearchMode::kIngestGraph6;
  throw ParseError("unknown search mode '" + std::string(s) + "'");
}

int CensusResult::count(int n, int k) const {
  auto it = by_order.find(n);
  if (it == by_order.end()) return 0;
  auto jt = it->second.find(k);
  return jt == it->second.end() ? 0 : jt->second.count();
}

std::vector<const CensusEntry*> CensusResult::with_l(int k) const {
  std::vector<const CensusEntry*> out;
  for (const auto& e : graphs) {
    if (e.three_connected && e.l == k) out.push_back(&e);
  }
  return out;
}

int CensusResult::max_l() const {
  int best = -1;
  for (const auto& e : graphs) {
    if (e.three_connected) best = std::max(best, e.l);
  }
  return best;
}

std::string CensusResult::to_json(int indent) const {
  nlohmann::json j;
  j["mode"] = lonely::to_string(mode);
  j["max_n"] = max_n;
  nlohmann::json orders = nlohmann::json::object();
  for (const auto& [n, ks] : by_order) {
    nlohmann::json per_k = nlohmann::json::object();
    for (const auto& [k, bucket] : ks) {
      per_k[std::to_string(k)] = {{"count", bucket.count()},
                                  {"representatives", bucket.representatives}};
    }
    orders[std::to_string(n)] = std::move(per_k);
  }
  j["orders"] = std::move(orders);
  nlohmann::json graphs_json = nlohmann::json::array();
  for (const auto& e : graphs) {
    graphs_json.push_back({{"code", e.code},
                           {"n", e.graph.order()},
                           {"l", e.l},
                           {"pm_count", e.pm_count},
                           {"three_connected", e.three_connected},
                           {"is_klee", e.is_klee},
                           {"double_covered", e.double_covered}});
  }
  j["graphs"] = std::move(graphs_json);
  return j.dump(indent);
}

std::string CensusResult::to_table() const {
  int top = 6;
  for (const auto& [n, ks] : by_order) {
    if (!ks.empty()) top = std::max(top, ks.rbegin()->first);
  }
  std::ostringstream out;
  out << std::setw(4) << "n" << std::setw(8) << "graphs";
  for (int k = 0; k <= top; ++k) out << std::setw(7) << ("l=" + std::to_string(k));
  out << "\n";
  for (const auto& [n, ks] : by_order) {
    int total = 0;
    for (const auto& [k, b] : ks) total += b.count();
    out << std::setw(4) << n << std::setw(8) << total;
    for (int k = 0; k <= top; ++k) out << std::setw(7) << count(n, k);
    out << "\n";
  }
  return out.str();
}

CensusResult census(const SearchConfig& config) {
  CensusResult result;
  result.mode = config.mode;
  result.max_n = config.max_n;
  std::vector<CubicGraph> graphs;
  const GenerationOptions gen{config.jobs, config.force};
  switch (config.mode) {
    case SearchMode::kAll3Connected:
      graphs = generate_cubic_3connected(config.max_n, gen);
      break;
    case SearchMode::kKleeOnly:
      graphs = generate_klee(config.max_n, gen);
      break;
    case SearchMode::kIngestGraph6: {
      std::map<std::pair<int, CanonicalForm>, CubicGraph> seen;
      for (const auto& path : config.files) {
        std::ifstream in(path);
        if (!in) throw ParseError("cannot open " + path.string());
        for (auto& g : read_graph6_stream(in)) {
          auto key = std::make_pair(g.order(), canonical_form(g));
          if (!seen.contains(key)) seen.emplace(std::move(key), canonical_graph(g));
        }
      }
      for (auto& [key, g] : seen) graphs.push_back(std::move(g));
      break;
    }
  }
  result.graphs = parallel_map(graphs.size(), config.jobs, [&](std::size_t i) {
    const auto& g = graphs[i];
    const auto report = matching_report(g);
    CensusEntry e{g, to_graph6_or_sparse6(g)};
    e.pm_count = report.pm_count;
    e.l = report.l();
    e.three_connected = is_three_connected(g);
    e.is_klee = is_klee(g).has_value();
    e.double_covered = report.min_count() >= 2;
    return e;
  });
  for (const auto& e : result.graphs) {
    if (!e.three_connected) continue;
    result.by_order[e.graph.order()][e.l].representatives.push_back(e.code);
  }
  return result;
}

std::vector<Child> children_with_same_l(const CubicGraph& g) {
  const auto report = matching_report(g);
  std::vector<Child> out;
  std::set<CanonicalForm> seen;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!g.has_distinct_neighbors(v)) continue;
    if (lonely_in_v_joins(g, v, report) != 0) continue;
    auto child = expand(g, v).graph;
    if (seen.insert(canonical_form(child)).second) out.push_back({v, std::move(child)});
  }
  return out;
}

std::vector<CubicGraph> descendants_with_same_l(const CubicGraph& g, int max_n) {
  std::map<CanonicalForm, CubicGraph> found;
  std::vector<CubicGraph> frontier{g};
  while (!frontier.empty()) {
    std::vector<CubicGraph> next;
    for (const auto& h : frontier) {
      if (h.order() + 2 > max_n) continue;
      for (auto& c : children_with_same_l(h)) {
        auto form = canonical_form(c.graph);
        if (found.contains(form)) continue;
        found.emplace(form, c.graph);
        next.push_back(std::move(c.graph));
      }
    }
    frontier = std::move(next);
  }
  std::vector<CubicGraph> out;
  for (auto& [form, h] : found) out.push_back(std::move(h));
  std::stable_sort(out.begin(), out.end(),
                   [](const CubicGraph& a, const CubicGraph& b) { return a.order() < b.order(); });
  return out;
}

bool check_u4_pattern(const ExtensionPattern& p) {
  return matching_report(extended_prism(p)).l() == 4;
}

bool check_u3_pattern(const ExtensionPattern& p) {
  return matching_report(extended_prism(p)).l() == 3;
}

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return !c.applicable || c.passed; });
}

std::string VerifyReport::to_json(int indent) const {
  nlohmann::json j;
  j["max_n"] = max_n;
  j["all_passed"] = all_passed();
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) {
    arr.push_back({{"id", c.id},
                   {"name", c.name},
                   {"applicable", c.applicable},
                   {"passed", c.passed},
                   {"detail", c.detail},
                   {"seconds", c.seconds}});
  }
  j["checks"] = std::move(arr);
  return j.dump(indent);
}

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    const char* tag = !c.applicable ? "SKIP" : (c.passed ? "PASS" : "FAIL");
    out << "[" << tag << "] " << std::setw(2) << c.id << " " << c.name << ": " << c.detail
        << " (" << std::fixed << std::setprecision(2) << c.seconds << " s)\n";
  }
  out << (all_passed() ? "all applicable checks passed" : "some checks failed") << "\n";
  return out.str();
}

VerifyReport verify_all(const VerifyOptions& opts) {
  VerifyReport report;
  report.max_n = opts.max_n;
  auto fixture = [&](std::string_view name) {
    return opts.data_dir ? named_graph(name, *opts.data_dir) : named_graph(name);
  };
  const int census_n = std::min(opts.max_n, kCapThreeConnected);
  std::optional<CensusResult> cen;
  auto get_census = [&]() -> const CensusResult& {
    if (!cen) {
      SearchConfig cfg;
      cfg.max_n = census_n;
      cfg.jobs = opts.jobs;
      cen = census(cfg);
    }
    return *cen;
  };
  // Census bound for the "n <= 12" statements.
  const int small_n = std::min(opts.max_n, 12);

  auto run = [&](int id, std::string name, int needs_n, auto body) {
    CheckResult c;
    c.id = id;
    c.name = std::move(name);
    if (opts.max_n < needs_n) {
      c.applicable = false;
      c.detail = "needs max_n >= " + std::to_string(needs_n);
      report.checks.push_back(std::move(c));
      return;
    }
    const auto start = std::chrono::steady_clock::now();
    try {
      c.passed = body(c.detail);
    } catch (const std::exception& ex) {
      c.passed = false;
      c.detail = std::string("error: ") + ex.what();
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.checks.push_back(std::move(c));
  };

  auto up_to = [&](const std::vector<const CensusEntry*>& entries, int bound) {
    std::vector<const CensusEntry*> out;
    for (const auto* e : entries) {
      if (e->graph.order() <= bound) out.push_back(e);
    }
    return out;
  };

  run(1, "graphs with six lonely edges are K4 and the prism", 6, [&](std::string& d) {
    const auto six = up_to(get_census().with_l(6), small_n);
    d = "n <= " + std::to_string(small_n) + ": " + join_codes(codes_of(six));
    return same_classes(graphs_of(six, 0), {fixture("k4"), fixture("prism")});
  });
  run(2, "the bicorn is the only graph with five lonely edges", 8, [&](std::string& d) {
    const auto five = up_to(get_census().with_l(5), small_n);
    d = "n <= " + std::to_string(small_n) + ": " + join_codes(codes_of(five));
    return same_classes(graphs_of(five, 0), {fixture("bicorn")});
  });
  run(3, "smallest graphs with four lonely edges are Pr(3,1) and Pr(3,3)", 10,
      [&](std::string& d) {
        const auto four = get_census().with_l(4);
        const auto below = graphs_of(up_to(four, 8), 0);
        const auto at10 = graphs_of(four, 10);
        d = std::to_string(below.size()) + " below n=10, " + std::to_string(at10.size()) +
            " at n=10";
        return below.empty() &&
               same_classes(at10, {extended_prism(ExtensionPattern::parse("31")),
                                   extended_prism(ExtensionPattern::parse("33"))});
      });
  run(4, "the smallest graph with three lonely edges is the tricorn", 10, [&](std::string& d) {
    const auto three = get_census().with_l(3);
    const auto below = graphs_of(up_to(three, 8), 0);
    const auto at10 = graphs_of(three, 10);
    d = std::to_string(below.size()) + " below n=10, " + std::to_string(at10.size()) +
        " at n=10";
    return below.empty() && same_classes(at10, {fixture("tricorn")});
  });
  run(5, "the smallest graph with two lonely edges is unique at n=12", 12, [&](std::string& d) {
    const auto two = get_census().with_l(2);
    const auto below = graphs_of(up_to(two, 10), 0);
    const auto at12 = graphs_of(two, 12);
    d = std::to_string(below.size()) + " below n=12, " + std::to_string(at12.size()) +
        " at n=12";
    return below.empty() && same_classes(at12, {fixture("u2_smallest")});
  });
  run(6, "the smallest graphs with one lonely edge are three at n=14", 14, [&](std::string& d) {
    const auto one = get_census().with_l(1);
    const auto below = graphs_of(up_to(one, 12), 0);
    const auto at14 = graphs_of(one, 14);
    d = std::to_string(below.size()) + " below n=14, " + std::to_string(at14.size()) +
        " at n=14";
    return below.empty() && same_classes(at14, {fixture("u1_smallest_1"),
                                                fixture("u1_smallest_2"),
                                                fixture("u1_smallest_3")});
  });
  run(7, "every 3-connected graph with a lonely edge is a Klee-graph", 4, [&](std::string& d) {
    int checked = 0, bad = 0;
    for (const auto& e : get_census().graphs) {
      if (e.graph.order() > small_n || !e.three_connected || e.l == 0) continue;
      ++checked;
      if (!e.is_klee) ++bad;
    }
    d = std::to_string(checked) + " graphs, " + std::to_string(bad) + " counterexamples";
    return bad == 0;
  });
  run(8, "maximum number of lonely edges is 6", 6, [&](std::string& d) {
    int best = -1;
    for (const auto& e : get_census().graphs) {
      if (e.graph.order() <= small_n && e.three_connected) best = std::max(best, e.l);
    }
    d = "max l = " + std::to_string(best) + " for n <= " + std::to_string(small_n);
    return best == 6;
  });
  run(9, "l(G^v) = l(G) - p_v on Klee-graphs", 4, [&](std::string& d) {
    const auto klee = generate_klee(small_n, {opts.jobs, false});
    const auto mismatches = parallel_map(klee.size(), opts.jobs, [&](std::size_t i) {
      const auto& g = klee[i];
      const auto r = matching_report(g);
      int bad = 0;
      for (Vertex v = 0; v < g.order(); ++v) {
        const int direct = matching_report(expand(g, v).graph).l();
        if (direct != r.l() - lonely_in_v_joins(g, v, r)) ++bad;
      }
      return bad;
    });
    const int bad = std::accumulate(mismatches.begin(), mismatches.end(), 0);
    d = std::to_string(klee.size()) + " Klee-graphs, " + std::to_string(bad) + " mismatches";
    return bad == 0;
  });
  run(10, "k-lonely family has k lonely edges in one perfect matching", 0, [&](std::string& d) {
    int bad = 0;
    for (int k = 1; k <= 10; ++k) {
      const auto built = build_k_lonely_tracked(k);
      const auto r = matching_report(built.graph);
      std::vector<Vertex> ends;
      for (EdgeId e : r.lonely_ids) {
        ends.push_back(built.graph.edge(e).u);
        ends.push_back(built.graph.edge(e).v);
      }
      std::sort(ends.begin(), ends.end());
      const bool disjoint = std::adjacent_find(ends.begin(), ends.end()) == ends.end();
      const bool common = disjoint && count_perfect_matchings(built.graph, ends) > 0;
      if (r.l() != k || !common) {
        ++bad;
        d += "k=" + std::to_string(k) + " gives l=" + std::to_string(r.l()) + "; ";
      }
    }
    if (bad == 0) d = "k = 1..10";
    return bad == 0;
  });
  run(11, "extension patterns match the closed forms", 0, [&](std::string& d) {
    int total = 0, bad = 0;
    for (int m = 0; m <= 5; ++m) {
      const auto patterns = ExtensionPattern::all_of_length(m);
      const auto flags = parallel_map(patterns.size(), opts.jobs, [&](std::size_t i) {
        const int l = matching_report(extended_prism(patterns[i])).l();
        return static_cast<int>((l == 4) != u4_pattern_predicate(patterns[i]) ||
                                (l == 3) != u3_pattern_predicate(patterns[i]));
      });
      total += static_cast<int>(patterns.size());
      bad += std::accumulate(flags.begin(), flags.end(), 0);
    }
    const bool w3 = check_u3_pattern(ExtensionPattern::parse("313"));
    d = std::to_string(total) + " patterns, " + std::to_string(bad) + " mismatches, (3,1,3) " +
        (w3 ? "has" : "lacks") + " three lonely edges";
    return bad == 0 && w3;
  });
  run(12, "two- and one-lonely-edge triangle families", 0, [&](std::string& d) {
    int bad = 0;
    for (int k = 2; k <= 8; ++k) {
      const auto g2 = build_u2_family(k);
      const auto r2 = matching_report(g2);
      bool ok2 = r2.l() == 2 && static_cast<int>(triangles(g2).size()) == k;
      if (ok2 && k >= 4) {
        const auto& a = g2.edge(r2.lonely_ids[0]);
        const auto& b = g2.edge(r2.lonely_ids[1]);
        // distance 2: disjoint, joined by an edge between endpoints
        const bool disjoint = a.u != b.u && a.u != b.v && a.v != b.u && a.v != b.v;
        const bool near = g2.adjacent(a.u, b.u) || g2.adjacent(a.u, b.v) ||
                          g2.adjacent(a.v, b.u) || g2.adjacent(a.v, b.v);
        auto in_triangle = [&](EdgeId e) {
          for (const auto& t : triangles(g2)) {
            for (const auto& s : t.sides) {
              if (g2.ref(e) == s) return true;
            }
          }
          return false;
        };
        const Vertex ends[] = {a.u, a.v, b.u, b.v};
        const bool no_common = count_perfect_matchings(g2, ends) == 0;
        ok2 = disjoint && near && in_triangle(r2.lonely_ids[0]) &&
              in_triangle(r2.lonely_ids[1]) && no_common;
      }
      const auto g1 = build_u1_family(k);
      const bool ok1 = matching_report(g1).l() == 1 &&
                       static_cast<int>(triangles(g1).size()) == k;
      if (!ok2) {
        ++bad;
        d += "u2 k=" + std::to_string(k) + " fails; ";
      }
      if (!ok1) {
        ++bad;
        d += "u1 k=" + std::to_string(k) + " fails; ";
      }
    }
    if (bad == 0) d = "k = 2..8";
    return bad == 0;
  });
  run(13, "matching enumeration and canonical form agree with brute force", 0,
      [&](std::string& d) {
        std::vector<CubicGraph> pool = generate_cubic_3connected(8);
        pool.push_back(theta());
        int pm_bad = 0;
        for (const auto& g : pool) {
          std::set<std::vector<EdgeId>> fast;
          for (const auto& pm : enumerate_perfect_matchings(g)) fast.insert(pm.edges);
          if (fast != subset_matchings(g)) ++pm_bad;
        }
        const auto iso_pool = generate_cubic_3connected(10);
        std::mt19937_64 rng(20240601);
        int iso_bad = 0;
        for (int i = 0; i < 200; ++i) {
          const auto& a = iso_pool[rng() % iso_pool.size()];
          CubicGraph b = a;
          if (rng() % 2 == 0) {
            std::vector<const CubicGraph*> same;
            for (const auto& h : iso_pool) {
              if (h.order() == a.order()) same.push_back(&h);
            }
            b = *same[rng() % same.size()];
          }
          std::vector<Vertex> perm(b.order());
          std::iota(perm.begin(), perm.end(), 0);
          std::shuffle(perm.begin(), perm.end(), rng);
          b = relabel(b, perm);
          if ((canonical_form(a) == canonical_form(b)) != permutation_isomorphic(a, b)) ++iso_bad;
        }
        d = std::to_string(pool.size()) + " graphs / " + std::to_string(pm_bad) +
            " matching mismatches, 200 pairs / " + std::to_string(iso_bad) +
            " isomorphism mismatches";
        return pm_bad == 0 && iso_bad == 0;
      });
  return report;
}

}  // namespace lonely
