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

#include "lonelyedge/constructions.hpp"

#include <algorithm>

#include "lonelyedge/connectivity.hpp"
#include "lonelyedge/fixtures.hpp"
#include "lonelyedge/matchings.hpp"

namespace lonely {

using Pairs = std::vector<CubicGraph::Pair>;

Expansion expand(const CubicGraph& g, Vertex v) {
  if (v < 0 || v >= g.order()) throw GraphError("no vertex " + std::to_string(v));
  if (!g.has_distinct_neighbors(v)) {
    throw ParallelAtVertexError("vertex " + std::to_string(v) + " has a parallel edge");
  }
  const int n = g.order();
  const auto& inc = g.incident(v);
  ExpansionMap map;
  map.root = v;
  map.neighbors = g.neighbors(v);
  map.new_vertices = {v, n, n + 1};
  Pairs pairs = g.edge_pairs();
  for (int i = 0; i < 3; ++i) {
    auto& p = pairs[inc[i]];
    (p.first == v ? p.first : p.second) = map.new_vertices[i];
  }
  const EdgeId m = g.size();
  pairs.emplace_back(map.new_vertices[0], map.new_vertices[1]);
  pairs.emplace_back(map.new_vertices[1], map.new_vertices[2]);
  pairs.emplace_back(map.new_vertices[2], map.new_vertices[0]);
  map.new_edges = {m, m + 1, m + 2};
  map.opposite = {inc[2], inc[0], inc[1]};
  return {CubicGraph::from_adjacency(n + 2, pairs), map};
}

Contraction contract_triangle(const CubicGraph& g, const Triangle& t) {
  const auto [a, b, c] = t.vertices;
  if (!(a != b && b != c && a != c) || !g.adjacent(a, b) || !g.adjacent(b, c) ||
      !g.adjacent(a, c)) {
    throw GraphError("not a triangle of the graph");
  }
  auto in_t = [&](Vertex x) { return x == a || x == b || x == c; };
  std::vector<Vertex> outside;
  for (Vertex x : t.vertices) {
    for (EdgeId e : g.incident(x)) {
      if (!in_t(g.other(e, x))) outside.push_back(g.other(e, x));
    }
  }
  std::vector<Vertex> sorted = outside;
  std::sort(sorted.begin(), sorted.end());
  if (outside.size() != 3 || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DegenerateContractionError("triangle " + std::to_string(a) + "," +
                                     std::to_string(b) + "," + std::to_string(c) +
                                     " does not have three distinct outer neighbors");
  }
  const Vertex merged_old = std::min({a, b, c});
  std::vector<Vertex> vertex_map(g.order(), -1);
  Vertex next = 0;
  for (Vertex x = 0; x < g.order(); ++x) {
    if (in_t(x) && x != merged_old) continue;
    vertex_map[x] = next++;
  }
  const Vertex merged = vertex_map[merged_old];
  for (Vertex x : t.vertices) vertex_map[x] = merged;
  Pairs pairs;
  std::vector<EdgeId> edge_map(g.size(), -1);
  for (EdgeId e = 0; e < g.size(); ++e) {
    const auto& ed = g.edge(e);
    if (in_t(ed.u) && in_t(ed.v)) continue;
    edge_map[e] = static_cast<EdgeId>(pairs.size());
    pairs.emplace_back(vertex_map[ed.u], vertex_map[ed.v]);
  }
  return {CubicGraph::from_adjacency(g.order() - 2, pairs), merged, std::move(vertex_map),
          std::move(edge_map)};
}

std::optional<KleeCertificate> is_klee(const CubicGraph& g) {
  if (g.order() < 4 || !g.is_simple()) return std::nullopt;
  std::vector<KleeStep> steps;
  CubicGraph h = g;
  while (h.order() > 4) {
    const auto ts = triangles(h);
    if (ts.empty()) return std::nullopt;
    try {
      const Triangle& t = ts.front();
      auto c = contract_triangle(h, t);
      KleeStep step{t, c.merged, std::move(c.vertex_map), {}};
      for (int i = 0; i < 3; ++i) {
        for (Vertex y : h.neighbors(t.vertices[i])) {
          if (y != t.vertices[0] && y != t.vertices[1] && y != t.vertices[2]) step.outside[i] = y;
        }
      }
      steps.push_back(std::move(step));
      h = std::move(c.graph);
    } catch (const DegenerateContractionError&) {
      return std::nullopt;
    }
  }
  // The only simple cubic graph on four vertices is K4.
  return KleeCertificate{std::move(steps), std::move(h)};
}

CubicGraph replay(const KleeCertificate& cert) {
  CubicGraph h = cert.base;
  for (auto it = cert.contractions.rbegin(); it != cert.contractions.rend(); ++it) {
    const auto x = expand(h, it->merged);
    const auto& before = it->vertex_map;
    const auto& tri = it->triangle.vertices;
    auto in_t = [&](Vertex y) { return y == tri[0] || y == tri[1] || y == tri[2]; };
    // label of x.graph -> label of the graph before the contraction
    std::vector<Vertex> back(x.graph.order(), -1);
    for (Vertex y = 0; y < static_cast<Vertex>(before.size()); ++y) {
      if (!in_t(y)) back[before[y]] = y;
    }
    for (int i = 0; i < 3; ++i) {
      for (int k = 0; k < 3; ++k) {
        if (x.map.neighbors[k] == before[it->outside[i]]) back[x.map.new_vertices[k]] = tri[i];
      }
    }
    Pairs pairs;
    for (const auto& e : x.graph.edges()) pairs.emplace_back(back[e.u], back[e.v]);
    h = CubicGraph::from_adjacency(x.graph.order(), pairs);
  }
  return h;
}

TwoCutConnection two_cut_connect(const CubicGraph& g1, const EdgeRef& e1,
                                 const CubicGraph& g2, const EdgeRef& e2,
                                 bool swap_second) {
  if (!is_bridgeless(g1) || !is_bridgeless(g2)) {
    throw BridgeError("2-cut-connection needs bridgeless inputs");
  }
  const EdgeId id1 = g1.id_of(e1);
  const EdgeId id2 = g2.id_of(e2);
  const int shift = g1.order();
  const Vertex x1 = e1.u, y1 = e1.v;
  Vertex x2 = e2.u + shift, y2 = e2.v + shift;
  if (swap_second) std::swap(x2, y2);

  Pairs pairs;
  pairs.reserve(g1.size() + g2.size());
  std::vector<EdgeId> left(g1.size(), -1), right(g2.size(), -1);
  for (EdgeId e = 0; e < g1.size(); ++e) {
    if (e == id1) continue;
    left[e] = static_cast<EdgeId>(pairs.size());
    pairs.emplace_back(g1.edge(e).u, g1.edge(e).v);
  }
  for (EdgeId e = 0; e < g2.size(); ++e) {
    if (e == id2) continue;
    right[e] = static_cast<EdgeId>(pairs.size());
    pairs.emplace_back(g2.edge(e).u + shift, g2.edge(e).v + shift);
  }
  const auto x_edge = static_cast<EdgeId>(pairs.size());
  pairs.emplace_back(x1, x2);
  pairs.emplace_back(y1, y2);
  return {CubicGraph::from_adjacency(g1.order() + g2.order(), pairs), x_edge, x_edge + 1,
          std::move(left), std::move(right)};
}

TwoCutReduction two_cut_reduce(const CubicGraph& g,
                               const std::pair<EdgeRef, EdgeRef>& cut) {
  const auto a = g.find(cut.first);
  const auto b = g.find(cut.second);
  if (!a || !b || *a == *b) throw NotACutError("cut edges must be two distinct edges of G");
  const EdgeId removed[] = {*a, *b};
  const auto comp = components_without(g, removed);
  const int parts = *std::max_element(comp.begin(), comp.end()) + 1;
  if (parts != 2) throw NotACutError("removing the edges leaves " + std::to_string(parts) + " components");
  // Endpoint of each cut edge on side 0 and on side 1.
  std::array<std::array<Vertex, 2>, 2> ends{};
  for (int k = 0; k < 2; ++k) {
    const auto& e = g.edge(removed[k]);
    if (comp[e.u] == comp[e.v]) throw NotACutError("a cut edge lies inside one side");
    ends[k][comp[e.u]] = e.u;
    ends[k][comp[e.v]] = e.v;
  }
  if (ends[0][0] == ends[1][0] || ends[0][1] == ends[1][1]) {
    throw NotACutError("cut edges share an endpoint");
  }
  std::vector<Vertex> vertex_map(g.order(), -1);
  std::array<int, 2> count{0, 0};
  for (Vertex x = 0; x < g.order(); ++x) vertex_map[x] = count[comp[x]]++;
  std::array<Pairs, 2> pairs;
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (e == removed[0] || e == removed[1]) continue;
    const auto& ed = g.edge(e);
    pairs[comp[ed.u]].emplace_back(vertex_map[ed.u], vertex_map[ed.v]);
  }
  for (int side = 0; side < 2; ++side) {
    pairs[side].emplace_back(vertex_map[ends[0][side]], vertex_map[ends[1][side]]);
  }
  return {CubicGraph::from_adjacency(count[0], pairs[0]),
          CubicGraph::from_adjacency(count[1], pairs[1]), comp, std::move(vertex_map)};
}

std::vector<CubicGraph> decompose_two_cuts(const CubicGraph& g) {
  if (!is_bridgeless(g)) throw BridgeError("decomposition needs a bridgeless graph");
  std::vector<CubicGraph> done;
  std::vector<CubicGraph> work{g};
  while (!work.empty()) {
    CubicGraph h = std::move(work.back());
    work.pop_back();
    const auto cuts = find_two_edge_cuts(h);
    if (cuts.empty()) {
      done.push_back(std::move(h));
      continue;
    }
    auto r = two_cut_reduce(h, cuts.front());
    work.push_back(std::move(r.second));
    work.push_back(std::move(r.first));
  }
  return done;
}

KLonelyGraph build_k_lonely_tracked(int k) {
  if (k < 1) throw GraphError("k must be at least 1");
  const CubicGraph seed = named_graph("u1_smallest_1");
  const auto& info = fixture_info("u1_smallest_1");
  const EdgeRef seed_edge = info.lonely.front();
  KLonelyGraph acc{seed, {seed.id_of(seed_edge)}};
  for (int i = 2; i <= k; ++i) {
    const EdgeId target = acc.lonely.back();
    auto c = two_cut_connect(seed, seed_edge, acc.graph, acc.graph.ref(target));
    std::vector<EdgeId> lonely;
    for (EdgeId e : acc.lonely) {
      if (e != target) lonely.push_back(c.right_edges[e]);
    }
    lonely.push_back(c.x_edge);
    lonely.push_back(c.y_edge);
    acc = KLonelyGraph{std::move(c.graph), std::move(lonely)};
  }
  return acc;
}

CubicGraph build_k_lonely(int k) { return build_k_lonely_tracked(k).graph; }

TExtension t_extension(const CubicGraph& g, const LabeledTriangle& t, int s) {
  if (s < 1 || s > 3) throw PatternError("extension index must be 1, 2 or 3");
  const auto& x = t.x;
  if (!g.adjacent(x[0], x[1]) || !g.adjacent(x[1], x[2]) || !g.adjacent(x[0], x[2])) {
    throw GraphError("labeled vertices do not form a triangle");
  }
  const Vertex target = x[s - 1];
  auto e = expand(g, target);
  LabeledTriangle next;
  for (int i = 0; i < 3; ++i) {
    const Vertex nb = e.map.neighbors[i];
    const auto label = std::find(x.begin(), x.end(), nb);
    const int slot = label == x.end() ? s - 1 : static_cast<int>(label - x.begin());
    next.x[slot] = e.map.new_vertices[i];
  }
  return {std::move(e.graph), next};
}

LabeledTriangle prism_t_v() { return {{4, 3, 5}}; }
LabeledTriangle prism_t_u() { return {{0, 2, 1}}; }

ExtendedPrism extended_prism_labeled(const ExtensionPattern& p) {
  ExtendedPrism out{prism(), prism_t_u(), prism_t_v()};
  for (int s : p.steps()) {
    auto ext = t_extension(out.graph, out.t_v, s);
    out.graph = std::move(ext.graph);
    out.t_v = ext.triangle;
  }
  return out;
}

CubicGraph extended_prism(const ExtensionPattern& p) {
  return extended_prism_labeled(p).graph;
}

CubicGraph extended_prism_from_t_u(const ExtensionPattern& p) {
  CubicGraph g = prism();
  LabeledTriangle t = prism_t_u();
  for (int s : p.steps()) {
    auto ext = t_extension(g, t, s);
    g = std::move(ext.graph);
    t = ext.triangle;
  }
  return g;
}

namespace {

// Fixture vertices of the four-triangle gadget.
constexpr Vertex kGadgetX = 3, kGadgetY = 4, kGadgetW = 10, kGadgetV = 11, kGadgetU = 12;

Vertex new_vertex_next_to(const ExpansionMap& map, Vertex neighbor) {
  for (int i = 0; i < 3; ++i) {
    if (map.neighbors[i] == neighbor) return map.new_vertices[i];
  }
  throw GraphError("expansion root is not adjacent to " + std::to_string(neighbor));
}

// Expands the endpoint x of one lonely edge for which some x-join contains
// another lonely edge; the result keeps one lonely edge.
CubicGraph expand_to_single_lonely(const CubicGraph& g) {
  const auto report = matching_report(g);
  for (EdgeId keep : report.lonely_ids) {
    for (Vertex x : {g.edge(keep).u, g.edge(keep).v}) {
      const bool kills_others = std::all_of(
          report.lonely_ids.begin(), report.lonely_ids.end(),
          [&](EdgeId e) { return e == keep || (!g.touches(e, x) && v_join_contains(g, x, e)); });
      if (kills_others) return expand(g, x).graph;
    }
  }
  throw GraphError("no vertex expansion leaves a single lonely edge");
}

}  // namespace

U2Gadget u2_gadget(int k) {
  if (k < 4) throw GraphError("the gadget family starts at four triangles");
  U2Gadget gk{named_graph("gadget_g4"), kGadgetX, kGadgetY, kGadgetU, kGadgetV, kGadgetW};
  for (int i = 4; i < k; ++i) {
    auto at_u = expand(gk.graph, gk.u);
    const Vertex u_next_to_v = new_vertex_next_to(at_u.map, gk.v);
    auto at_v = expand(at_u.graph, gk.v);
    const Vertex v_y = new_vertex_next_to(at_v.map, gk.y);
    const Vertex v_u = new_vertex_next_to(at_v.map, u_next_to_v);
    const Vertex v_w = new_vertex_next_to(at_v.map, gk.w);
    gk = U2Gadget{std::move(at_v.graph), gk.x, gk.y, v_w, v_y, v_u};
  }
  return gk;
}

CubicGraph build_u2_family(int k) {
  if (k < 2) throw GraphError("k must be at least 2");
  if (k == 2) return extended_prism(ExtensionPattern::parse("1133"));
  if (k == 3) return named_graph("u2_smallest");
  return u2_gadget(k).graph;
}

CubicGraph build_u1_family(int k) {
  if (k < 2) throw GraphError("k must be at least 2");
  if (k == 2) return expand(extended_prism(ExtensionPattern::parse("2132")), prism_t_u().x[0]).graph;
  if (k == 3) return expand_to_single_lonely(named_graph("u2_smallest"));
  const auto gk = u2_gadget(k);
  const EdgeId vw = gk.graph.id_of(EdgeRef(gk.v, gk.w));
  if (!v_join_contains(gk.graph, gk.x, vw)) {
    throw GraphError("no x-join contains the lonely edge vw");
  }
  return expand(gk.graph, gk.x).graph;
}

}  // namespace lonely
