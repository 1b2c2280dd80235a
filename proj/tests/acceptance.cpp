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

// One line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lonelyedge/constructions.hpp"
#include "lonelyedge/fixtures.hpp"
#include "lonelyedge/matchings.hpp"
#include "lonelyedge/canonical.hpp"
#include "lonelyedge/search.hpp"
#include "oracles.hpp"

using namespace lonely;

namespace {

// Pinned limits. Counts are exact: zero tolerance on every count below.
constexpr double kCensus12Seconds = 60.0;
constexpr double kCensus14Seconds = 300.0;
constexpr double kPatternSeconds = 120.0;
constexpr int kCensusOrder = 12;
constexpr int kSingleLonelyOrder = 14;
constexpr int kMaxLonely = 6;
constexpr int kMaxK = 10;
constexpr int kMaxPatternLength = 5;
constexpr int kFamilyMin = 2;
constexpr int kFamilyMax = 8;
constexpr int kMatchingOracleOrder = 8;
constexpr int kIsoOracleOrder = 10;
constexpr int kIsoPairs = 200;
constexpr std::uint64_t kSeed = 0x5eed;

struct Outcome {
  bool passed = false;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!out.passed) ++failures;
  std::printf("[%s] criterion %2d: %s -- %s (%.2f s)\n", out.passed ? "PASS" : "FAIL", id, name.c_str(),
              out.detail.c_str(), secs);
  std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

// Graphs of the census with l = k and order in [lo, hi].
std::vector<CubicGraph> with_l(const CensusResult& c, int k, int lo, int hi) {
  std::vector<CubicGraph> out;
  for (const auto* e : c.with_l(k)) {
    if (e->graph.order() >= lo && e->graph.order() <= hi) out.push_back(e->graph);
  }
  return out;
}

// Each graph of `got` is isomorphic to exactly one of `want`, bijectively,
// decided by permutation search.
bool same_up_to_iso(const std::vector<CubicGraph>& got, const std::vector<CubicGraph>& want) {
  if (got.size() != want.size()) return false;
  std::vector<char> used(want.size(), 0);
  for (const auto& g : got) {
    bool matched = false;
    for (std::size_t i = 0; i < want.size() && !matched; ++i) {
      if (!used[i] && oracle::permutation_isomorphic(g, want[i])) {
        used[i] = 1;
        matched = true;
      }
    }
    if (!matched) return false;
  }
  return true;
}

CubicGraph ep(const char* p) { return extended_prism(ExtensionPattern::parse(p)); }

}  // namespace

int main() {
  CensusResult census12;
  double census12_secs = 0;
  {
    const auto t = std::chrono::steady_clock::now();
    SearchConfig cfg;
    cfg.max_n = kCensusOrder;
    cfg.jobs = 0;
    census12 = census(cfg);
    census12_secs = seconds_since(t);
  }

  report(1, "six lonely edges only in K4 and the prism (n <= 12, all 3-connected)", [&] {
    const auto six = with_l(census12, 6, 4, kCensusOrder);
    const bool ok = same_up_to_iso(six, {k4(), prism()}) && census12_secs < kCensus12Seconds;
    return Outcome{ok, std::to_string(six.size()) + " graphs, census " +
                           std::to_string(census12_secs) + " s (limit " +
                           std::to_string(kCensus12Seconds) + " s)"};
  });

  report(2, "five lonely edges only in the bicorn (n <= 12)", [&] {
    const auto five = with_l(census12, 5, 4, kCensusOrder);
    const bool ok = same_up_to_iso(five, {named_graph("bicorn")}) && five.at(0).order() == 8;
    return Outcome{ok, std::to_string(five.size()) + " graphs"};
  });

  report(3, "smallest graphs with four lonely edges: two at n = 10, Pr(3,1) and Pr(3,3)", [&] {
    const auto below = with_l(census12, 4, 4, 8);
    const auto at10 = with_l(census12, 4, 10, 10);
    const bool ok = below.empty() && same_up_to_iso(at10, {ep("31"), ep("33")});
    return Outcome{ok, std::to_string(below.size()) + " below 10, " + std::to_string(at10.size()) + " at 10"};
  });

  report(4, "smallest graph with three lonely edges: the tricorn, n = 10", [&] {
    const auto below = with_l(census12, 3, 4, 8);
    const auto at10 = with_l(census12, 3, 10, 10);
    const bool ok = below.empty() && same_up_to_iso(at10, {named_graph("tricorn")});
    return Outcome{ok, std::to_string(below.size()) + " below 10, " + std::to_string(at10.size()) + " at 10"};
  });

  report(5, "smallest graph with two lonely edges: unique at n = 12", [&] {
    const auto below = with_l(census12, 2, 4, 10);
    const auto at12 = with_l(census12, 2, 12, 12);
    const bool ok = below.empty() && same_up_to_iso(at12, {named_graph("u2_smallest")});
    return Outcome{ok, std::to_string(below.size()) + " below 12, " + std::to_string(at12.size()) + " at 12"};
  });

  report(6, "smallest graphs with one lonely edge: exactly three at n = 14", [&] {
    const auto t = std::chrono::steady_clock::now();
    SearchConfig cfg;
    cfg.max_n = kSingleLonelyOrder;
    cfg.jobs = 0;
    const auto c = census(cfg);
    const double secs = seconds_since(t);
    const auto below = with_l(c, 1, 4, kSingleLonelyOrder - 2);
    const auto at14 = with_l(c, 1, kSingleLonelyOrder, kSingleLonelyOrder);
    const bool ok = below.empty() &&
                    same_up_to_iso(at14, {named_graph("u1_smallest_1"), named_graph("u1_smallest_2"),
                                          named_graph("u1_smallest_3")}) &&
                    secs < kCensus14Seconds;
    return Outcome{ok, std::to_string(below.size()) + " below 14, " + std::to_string(at14.size()) +
                           " at 14, all 3-connected mode, " + std::to_string(secs) + " s (limit " +
                           std::to_string(kCensus14Seconds) + " s)"};
  });

  report(7, "every 3-connected cubic graph with a lonely edge is a Klee-graph (n <= 12)", [&] {
    int checked = 0, counterexamples = 0;
    for (const auto& e : census12.graphs) {
      if (!e.three_connected || e.l == 0) continue;
      ++checked;
      const auto cert = is_klee(e.graph);
      if (!cert || !oracle::permutation_isomorphic(replay(*cert), e.graph)) ++counterexamples;
    }
    return Outcome{counterexamples == 0, std::to_string(checked) + " graphs, " +
                                             std::to_string(counterexamples) + " counterexamples"};
  });

  report(8, "maximum number of lonely edges over 3-connected graphs n <= 12 is 6", [&] {
    int best = -1;
    for (const auto& e : census12.graphs) {
      if (e.three_connected) best = std::max(best, e.l);
    }
    return Outcome{best == kMaxLonely, "max l = " + std::to_string(best)};
  });

  report(9, "l(G^v) = l(G) - p_v for every Klee-graph n <= 12 and every vertex", [&] {
    int cases = 0, mismatches = 0;
    for (const auto& g : generate_klee(kCensusOrder)) {
      const auto r = matching_report(g);
      for (Vertex v = 0; v < g.order(); ++v) {
        ++cases;
        // p_v from explicit v-join enumeration
        const auto joins = enumerate_v_joins(g, v);
        int p = 0;
        for (EdgeId e : r.lonely_ids) {
          if (g.touches(e, v)) continue;
          for (const auto& j : joins) {
            if (std::find(j.edges.begin(), j.edges.end(), e) != j.edges.end()) {
              ++p;
              break;
            }
          }
        }
        const int direct = matching_report(expand(g, v).graph).l();
        if (direct != r.l() - p) ++mismatches;
      }
    }
    return Outcome{mismatches == 0, std::to_string(cases) + " (graph, vertex) cases, " +
                                        std::to_string(mismatches) + " mismatches"};
  });

  report(10, "k-lonely family: exactly k lonely edges in one perfect matching, 1 <= k <= 10", [&] {
    std::string bad;
    for (int k = 1; k <= kMaxK; ++k) {
      const auto g = build_k_lonely(k);
      const auto r = matching_report(g);
      std::vector<Vertex> ends;
      for (EdgeId e : r.lonely_ids) {
        ends.push_back(g.edge(e).u);
        ends.push_back(g.edge(e).v);
      }
      std::vector<Vertex> sorted = ends;
      std::sort(sorted.begin(), sorted.end());
      const bool disjoint = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
      const bool common = disjoint && count_perfect_matchings(g, ends) == 1;
      if (r.l() != k || !common) bad += " k=" + std::to_string(k);
    }
    return Outcome{bad.empty(), bad.empty() ? "k = 1..10 exact" : "failing:" + bad};
  });

  report(11, "extension patterns m <= 5: enumeration matches both closed forms", [&] {
    const auto t = std::chrono::steady_clock::now();
    int total = 0, mismatches = 0;
    for (int m = 0; m <= kMaxPatternLength; ++m) {
      for (const auto& p : ExtensionPattern::all_of_length(m)) {
        ++total;
        const int l = matching_report(extended_prism(p)).l();
        if ((l == 4) != u4_pattern_predicate(p)) ++mismatches;
        if ((l == 3) != u3_pattern_predicate(p)) ++mismatches;
      }
    }
    const bool w3 = matching_report(ep("313")).l() == 3 && u3_pattern_predicate(ExtensionPattern::parse("313"));
    const double secs = seconds_since(t);
    return Outcome{mismatches == 0 && w3 && secs < kPatternSeconds,
                   std::to_string(total) + " patterns, " + std::to_string(mismatches) +
                       " mismatches, (3,1,3) " + (w3 ? "in" : "not in") + " the three-edge class, " +
                       std::to_string(secs) + " s (limit " + std::to_string(kPatternSeconds) + " s)"};
  });

  report(12, "triangle families: l = 2 / l = 1 with exactly k triangles, 2 <= k <= 8", [&] {
    std::string bad;
    for (int k = kFamilyMin; k <= kFamilyMax; ++k) {
      const auto g2 = build_u2_family(k);
      const auto r2 = matching_report(g2);
      bool ok = r2.l() == 2 && static_cast<int>(triangles(g2).size()) == k;
      if (ok && k >= 4) {
        const auto& a = g2.edge(r2.lonely_ids[0]);
        const auto& b = g2.edge(r2.lonely_ids[1]);
        const bool disjoint = a.u != b.u && a.u != b.v && a.v != b.u && a.v != b.v;
        const bool distance_two = disjoint && (g2.adjacent(a.u, b.u) || g2.adjacent(a.u, b.v) ||
                                               g2.adjacent(a.v, b.u) || g2.adjacent(a.v, b.v));
        int in_triangles = 0;
        for (EdgeId e : r2.lonely_ids) {
          for (const auto& t : triangles(g2)) {
            if (std::find(t.sides.begin(), t.sides.end(), g2.ref(e)) != t.sides.end()) {
              ++in_triangles;
              break;
            }
          }
        }
        const bool share = oracle::has_perfect_matching_without(g2, {a.u, a.v, b.u, b.v});
        ok = distance_two && in_triangles == 2 && !share;
      }
      if (!ok) bad += " u2(k=" + std::to_string(k) + ")";
      const auto g1 = build_u1_family(k);
      if (matching_report(g1).l() != 1 || static_cast<int>(triangles(g1).size()) != k) {
        bad += " u1(k=" + std::to_string(k) + ")";
      }
    }
    return Outcome{bad.empty(), bad.empty() ? "k = 2..8 exact, properties hold for k >= 4" : "failing:" + bad};
  });

  report(13, "oracle equivalence: matchings n <= 8, canonical form on 200 pairs n <= 10", [&] {
    // every loopless cubic multigraph n <= 8, connected or not
    std::vector<CubicGraph> pool;
    for (int n = 2; n <= kMatchingOracleOrder; n += 2) {
      for (const auto& g : oracle::all_cubic_multigraphs(n)) pool.push_back(g);
    }
    int pm_mismatch = 0;
    for (const auto& g : pool) {
      std::set<std::vector<EdgeId>> fast;
      for (const auto& pm : enumerate_perfect_matchings(g)) fast.insert(pm.edges);
      if (fast != oracle::subset_matchings(g)) ++pm_mismatch;
    }
    std::vector<CubicGraph> iso_pool = generate_cubic_3connected(kIsoOracleOrder);
    std::mt19937_64 rng(kSeed);
    for (int n = 4; n <= kIsoOracleOrder; n += 2) {
      for (int i = 0; i < 20; ++i) iso_pool.push_back(oracle::pairing_model(n, rng));
    }
    int iso_mismatch = 0;
    for (int i = 0; i < kIsoPairs; ++i) {
      const auto& a = iso_pool[rng() % iso_pool.size()];
      std::vector<const CubicGraph*> same;
      for (const auto& h : iso_pool) {
        if (h.order() == a.order()) same.push_back(&h);
      }
      const CubicGraph& base = (i % 2 == 0) ? a : *same[rng() % same.size()];
      const auto b = oracle::shuffled(base, rng);
      if ((canonical_form(a) == canonical_form(b)) != oracle::permutation_isomorphic(a, b)) ++iso_mismatch;
    }
    return Outcome{pm_mismatch == 0 && iso_mismatch == 0,
                   std::to_string(pool.size()) + " multigraphs / " + std::to_string(pm_mismatch) +
                       " matching mismatches; " + std::to_string(kIsoPairs) + " pairs / " +
                       std::to_string(iso_mismatch) + " isomorphism mismatches"};
  });

  std::printf("%d of 13 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
