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

#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "lonelyedge/graph.hpp"
#include "lonelyedge/patterns.hpp"

namespace lonely {

// ---------------------------------------------------------------------------
// Triangle expansion and contraction
// ---------------------------------------------------------------------------

// Re-indexing of expand(G, v): with x_1, x_2, x_3 the neighbors of v in
// incidence order, v_1 keeps the id v, v_2 = n and v_3 = n + 1. Every old edge
// keeps its id (the edge v x_i becomes v_i x_i); the new edges v_1v_2,
// v_2v_3, v_3v_1 get ids m, m + 1, m + 2.
struct ExpansionMap {
  Vertex root = 0;
  std::array<Vertex, 3> neighbors{};     // x_1, x_2, x_3
  std::array<Vertex, 3> new_vertices{};  // v_i adjacent to x_i
  std::array<EdgeId, 3> new_edges{};     // v_1v_2, v_2v_3, v_3v_1
  std::array<EdgeId, 3> opposite{};      // old edge opposite new_edges[k]
};

struct Expansion {
  CubicGraph graph;
  ExpansionMap map;
};

// Throws ParallelAtVertexError when v has a parallel edge.
Expansion expand(const CubicGraph& g, Vertex v);

// Re-indexing of contract_triangle: the triangle collapses onto its smallest
// vertex id (`merged`); other vertices keep their relative order. Surviving
// edges keep their relative order; the three sides are dropped.
struct Contraction {
  CubicGraph graph;
  Vertex merged = 0;
  std::vector<Vertex> vertex_map;  // old vertex -> new vertex
  std::vector<EdgeId> edge_map;    // old edge -> new edge, -1 for the sides
};

// Throws GraphError if T is not a triangle of G and
// DegenerateContractionError if the result would have a loop or a new
// parallel edge.
Contraction contract_triangle(const CubicGraph& g, const Triangle& t);

struct KleeStep {
  Triangle triangle;  // in the graph before this contraction
  Vertex merged = 0;  // its image in the graph after
  std::vector<Vertex> vertex_map;  // before -> after, as in Contraction
  std::array<Vertex, 3> outside{};  // neighbor of triangle.vertices[i] off the triangle
};

struct KleeCertificate {
  std::vector<KleeStep> contractions;  // in contraction order
  CubicGraph base;                     // the K4 reached at the end
};

// Greedy triangle contraction down to K4. Any triangle may be chosen: the
// contraction of a triangle of a Klee-graph other than K4 is again a
// Klee-graph. Non-simple graphs and graphs with n < 4 are rejected.
std::optional<KleeCertificate> is_klee(const CubicGraph& g);

// Expands the recorded vertices in reverse order, starting from the base;
// the result carries the vertex labels of the certified graph.
CubicGraph replay(const KleeCertificate& cert);

// ---------------------------------------------------------------------------
// 2-cut connection and reduction
// ---------------------------------------------------------------------------

// (G1, x1y1) + (G2, x2y2): x1y1 and x2y2 are removed and x1x2, y1y2 added.
// x_i and y_i are the smaller and larger endpoint of the given edge; with
// `swap_second` the endpoints of x2y2 are exchanged. G1 keeps vertex ids
// 0..n1-1, G2 is shifted by n1; edges are G1's minus x1y1, then G2's minus
// x2y2, then x1x2 and y1y2.
struct TwoCutConnection {
  CubicGraph graph;
  EdgeId x_edge = 0;  // x1x2
  EdgeId y_edge = 0;  // y1y2
  std::vector<EdgeId> left_edges;   // G1 edge -> new edge, -1 for x1y1
  std::vector<EdgeId> right_edges;  // G2 edge -> new edge, -1 for x2y2
};

// Throws BridgeError if either input has a bridge.
TwoCutConnection two_cut_connect(const CubicGraph& g1, const EdgeRef& e1,
                                 const CubicGraph& g2, const EdgeRef& e2,
                                 bool swap_second = false);

// Components of G - F + x1y1 + x2y2. `first` contains the smallest vertex
// id; each part keeps the relative vertex and edge order and the replacement
// edge is appended last.
struct TwoCutReduction {
  CubicGraph first;
  CubicGraph second;
  std::vector<int> part;           // old vertex -> 0 or 1
  std::vector<Vertex> vertex_map;  // old vertex -> id within its part
};

// Throws NotACutError when F is not a 2-edge-cut with four distinct ends.
TwoCutReduction two_cut_reduce(const CubicGraph& g,
                               const std::pair<EdgeRef, EdgeRef>& cut);

// Reduces along 2-edge-cuts until every part is 3-connected or the theta
// graph.
std::vector<CubicGraph> decompose_two_cuts(const CubicGraph& g);

// ---------------------------------------------------------------------------
// Families
// ---------------------------------------------------------------------------

// A bridgeless cubic graph with exactly k lonely edges, all in one perfect
// matching: the first smallest single-lonely-edge fixture, 2-cut-connected
// k - 1 times onto the most recently created lonely edge.
struct KLonelyGraph {
  CubicGraph graph;
  std::vector<EdgeId> lonely;  // predicted lonely edges
};
KLonelyGraph build_k_lonely_tracked(int k);
CubicGraph build_k_lonely(int k);

// Triangle x_1 x_2 x_3 with its labels.
struct LabeledTriangle {
  std::array<Vertex, 3> x{};
};

struct TExtension {
  CubicGraph graph;
  LabeledTriangle triangle;
};

// Expands x_s (s in {1,2,3}); in the new triangle, x_j for j != s is the
// vertex adjacent to the old x_j and x_s is the remaining one.
TExtension t_extension(const CubicGraph& g, const LabeledTriangle& t, int s);

struct ExtendedPrism {
  CubicGraph graph;
  LabeledTriangle t_u;
  LabeledTriangle t_v;
};

// Labels of the prism(): T_v = (4, 3, 5) and T_u = (0, 2, 1), so that u_i and
// x_i are joined by a rung.
LabeledTriangle prism_t_v();
LabeledTriangle prism_t_u();

ExtendedPrism extended_prism_labeled(const ExtensionPattern& p);
CubicGraph extended_prism(const ExtensionPattern& p);
// Same construction driven on T_u instead of T_v.
CubicGraph extended_prism_from_t_u(const ExtensionPattern& p);

// Member of the two-lonely-edge family with exactly k triangles, k >= 4, with
// its lonely edges xy and vw (y adjacent to v) and u the third vertex of the
// triangle on vw.
struct U2Gadget {
  CubicGraph graph;
  Vertex x = 0, y = 0, u = 0, v = 0, w = 0;
};
U2Gadget u2_gadget(int k);

// k >= 2. Throws GraphError for smaller k.
CubicGraph build_u2_family(int k);
CubicGraph build_u1_family(int k);

}  // namespace lonely
