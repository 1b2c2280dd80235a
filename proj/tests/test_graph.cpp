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

#include <doctest.h>

#include <vector>

#include "lonelyedge/errors.hpp"
#include "lonelyedge/fixtures.hpp"
#include "lonelyedge/graph.hpp"

using namespace lonely;
using Pairs = std::vector<CubicGraph::Pair>;

TEST_CASE("from_adjacency builds K4 and keeps input order") {
  const Pairs pairs{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  const auto g = CubicGraph::from_adjacency(4, pairs);
  CHECK(g.order() == 4);
  CHECK(g.size() == 6);
  CHECK(g.edge_pairs() == pairs);
  CHECK(g.is_simple());
  CHECK(g == k4());
  for (Vertex v = 0; v < 4; ++v) CHECK(g.has_distinct_neighbors(v));
}

TEST_CASE("theta graph with three parallel edges is accepted") {
  const auto g = CubicGraph::from_adjacency(2, Pairs{{0, 1}, {0, 1}, {0, 1}});
  CHECK(g.size() == 3);
  CHECK(g.multiplicity(0, 1) == 3);
  CHECK_FALSE(g.is_simple());
  CHECK_FALSE(g.has_distinct_neighbors(0));
  CHECK(g.ref(0) == EdgeRef(0, 1, 0));
  CHECK(g.ref(1) == EdgeRef(0, 1, 1));
  CHECK(g.ref(2) == EdgeRef(1, 0, 2));
  CHECK(g.id_of(EdgeRef(1, 0, 2)) == 2);
  CHECK_FALSE(g.find(EdgeRef(0, 1, 3)).has_value());
  CHECK_THROWS_AS(g.id_of(EdgeRef(0, 1, 3)), GraphError);
}

TEST_CASE("from_adjacency rejects invalid input") {
  CHECK_THROWS_AS(CubicGraph::from_adjacency(4, Pairs{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}),
                  DegreeError);
  CHECK_THROWS_AS(CubicGraph::from_adjacency(2, Pairs{{0, 0}, {0, 1}, {1, 1}}), LoopError);
  CHECK_THROWS_AS(CubicGraph::from_adjacency(3, Pairs{{0, 1}, {1, 2}, {0, 2}}), ParityError);
  CHECK_THROWS_AS(CubicGraph::from_adjacency(0, Pairs{}), ParityError);
  CHECK_THROWS_AS(CubicGraph::from_adjacency(2, Pairs{{0, 1}, {0, 1}, {0, 5}}), GraphError);
}

TEST_CASE("EdgeRef normalizes and prints") {
  EdgeRef r(5, 2);
  CHECK(r.u == 2);
  CHECK(r.v == 5);
  CHECK(r.to_string() == "2-5");
  CHECK(EdgeRef(0, 1, 2).to_string() == "0-1#2");
  CHECK(EdgeRef(0, 1) < EdgeRef(0, 1, 1));
  CHECK(EdgeRef(0, 5) < EdgeRef(1, 2));
}

TEST_CASE("incidence and neighbors") {
  const auto g = prism();
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto& inc = g.incident(v);
    CHECK(inc[0] < inc[1]);
    CHECK(inc[1] < inc[2]);
    for (EdgeId e : inc) CHECK(g.touches(e, v));
    const auto nb = g.neighbors(v);
    for (int i = 0; i < 3; ++i) CHECK(nb[i] == g.other(inc[i], v));
  }
  CHECK(g.adjacent(0, 4));
  CHECK(g.adjacent(1, 5));
  CHECK(g.adjacent(2, 3));
  CHECK_FALSE(g.adjacent(0, 3));
}

TEST_CASE("degree sum equals twice the edge count") {
  for (const auto& name : named_graph_names()) {
    const auto g = named_graph(name);
    std::vector<int> degree(g.order(), 0);
    for (const auto& e : g.edges()) {
      ++degree[e.u];
      ++degree[e.v];
    }
    int sum = 0;
    for (int d : degree) {
      CHECK(d == 3);
      sum += d;
    }
    CHECK(sum == 2 * g.size());
    CHECK(sum == 3 * g.order());
  }
}

TEST_CASE("triangles") {
  CHECK(triangles(k4()).size() == 4);
  const auto p = triangles(prism());
  REQUIRE(p.size() == 2);
  CHECK(p[0].vertices == std::array<Vertex, 3>{0, 1, 2});
  CHECK(p[1].vertices == std::array<Vertex, 3>{3, 4, 5});
  CHECK(p[0].sides == std::array<EdgeRef, 3>{EdgeRef(0, 1), EdgeRef(1, 2), EdgeRef(0, 2)});
  CHECK(triangles(named_graph("tricorn")).size() == 3);
  CHECK(triangles(theta()).empty());
  CHECK(triangles(named_graph("truncated_k4")).size() == 4);
}

TEST_CASE("triangles of Klee-graphs other than K4 are vertex-disjoint") {
  for (const char* name : {"prism", "bicorn", "tricorn", "truncated_k4", "pr1", "pr2", "u2_smallest",
                           "u1_smallest_1", "u1_smallest_2", "u1_smallest_3", "gadget_g4"}) {
    const auto ts = triangles(named_graph(name));
    std::vector<int> seen(named_graph(name).order(), 0);
    for (const auto& t : ts) {
      for (Vertex v : t.vertices) ++seen[v];
    }
    for (int s : seen) CHECK(s <= 1);
  }
}
