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
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lonelyedge/errors.hpp"

namespace lonely {

using Vertex = std::int32_t;
using EdgeId = std::int32_t;

// Identity of one edge instance: normalized endpoints plus the index of the
// edge among all parallel copies joining the same pair (in edge-list order).
struct EdgeRef {
  Vertex u = 0;
  Vertex v = 0;
  int slot = 0;

  EdgeRef() = default;
  EdgeRef(Vertex a, Vertex b, int s = 0)
      : u(a < b ? a : b), v(a < b ? b : a), slot(s) {}

  friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
  std::string to_string() const;
};

struct Edge {
  Vertex u;
  Vertex v;
};

// A cubic multigraph without loops. Immutable after construction; vertices
// are the dense ids 0..n-1 and edges keep the order they were given in.
class CubicGraph {
 public:
  using Pair = std::pair<Vertex, Vertex>;

  // Throws ParityError (n odd or n < 2), LoopError, DegreeError.
  static CubicGraph from_adjacency(int n, std::span<const Pair> edge_pairs);
  static CubicGraph from_adjacency(int n, const std::vector<Pair>& edge_pairs) {
    return from_adjacency(n, std::span<const Pair>(edge_pairs));
  }

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  // The three edges at v, in increasing edge-id order.
  const std::array<EdgeId, 3>& incident(Vertex v) const { return incidence_[v]; }
  Vertex other(EdgeId e, Vertex v) const {
    return edges_[e].u == v ? edges_[e].v : edges_[e].u;
  }
  // Neighbors in incidence order (repeats for parallel edges).
  std::array<Vertex, 3> neighbors(Vertex v) const;
  bool has_distinct_neighbors(Vertex v) const;
  bool adjacent(Vertex a, Vertex b) const { return multiplicity(a, b) > 0; }
  int multiplicity(Vertex a, Vertex b) const;
  bool is_simple() const;
  bool touches(EdgeId e, Vertex v) const {
    return edges_[e].u == v || edges_[e].v == v;
  }

  EdgeRef ref(EdgeId e) const { return refs_[e]; }
  std::optional<EdgeId> find(const EdgeRef& r) const;
  // Throws GraphError when absent.
  EdgeId id_of(const EdgeRef& r) const;

  std::vector<Pair> edge_pairs() const;

  // Labeled equality: same order, same edge sequence.
  friend bool operator==(const CubicGraph& a, const CubicGraph& b);

 private:
  CubicGraph() = default;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<EdgeRef> refs_;
  std::vector<std::array<EdgeId, 3>> incidence_;
};

// Vertex set {a, b, c} inducing a triangle; sides use slot 0 when parallel
// copies exist.
struct Triangle {
  std::array<Vertex, 3> vertices;  // sorted ascending
  std::array<EdgeRef, 3> sides;    // ab, bc, ac

  friend bool operator==(const Triangle&, const Triangle&) = default;
};

std::vector<Triangle> triangles(const CubicGraph& g);

// Builders for the smallest members of the family.
CubicGraph k4();
CubicGraph theta();
// Prism with triangles {0,1,2} and {3,4,5} and rungs 0-4, 1-5, 2-3.
CubicGraph prism();

}  // namespace lonely
