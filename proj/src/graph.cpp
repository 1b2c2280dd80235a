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

#include "lonelyedge/graph.hpp"

#include <algorithm>
#include <map>

namespace lonely {

std::string EdgeRef::to_string() const {
  std::string s = std::to_string(u) + "-" + std::to_string(v);
  if (slot != 0) s += "#" + std::to_string(slot);
  return s;
}

CubicGraph CubicGraph::from_adjacency(int n, std::span<const Pair> edge_pairs) {
  if (n < 2 || n % 2 != 0) {
    throw ParityError("vertex count must be even and at least 2, got " +
                      std::to_string(n));
  }
  CubicGraph g;
  g.n_ = n;
  g.edges_.reserve(edge_pairs.size());
  std::vector<int> degree(n, 0);
  std::map<std::pair<Vertex, Vertex>, int> seen;
  for (const auto& [a, b] : edge_pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw GraphError("edge " + std::to_string(a) + "-" + std::to_string(b) +
                       " out of range for n=" + std::to_string(n));
    }
    if (a == b) throw LoopError("loop at vertex " + std::to_string(a));
    const EdgeId id = static_cast<EdgeId>(g.edges_.size());
    g.edges_.push_back({a, b});
    int& slot = seen[{std::min(a, b), std::max(a, b)}];
    g.refs_.emplace_back(a, b, slot++);
    if (++degree[a] > 3 || ++degree[b] > 3) {
      throw DegreeError("vertex of degree above 3 at edge " +
                        std::to_string(id));
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] != 3) {
      throw DegreeError("vertex " + std::to_string(v) + " has degree " +
                        std::to_string(degree[v]));
    }
  }
  g.incidence_.assign(n, {-1, -1, -1});
  std::vector<int> fill(n, 0);
  for (EdgeId e = 0; e < g.size(); ++e) {
    g.incidence_[g.edges_[e].u][fill[g.edges_[e].u]++] = e;
    g.incidence_[g.edges_[e].v][fill[g.edges_[e].v]++] = e;
  }
  return g;
}

std::array<Vertex, 3> CubicGraph::neighbors(Vertex v) const {
  const auto& inc = incidence_[v];
  return {other(inc[0], v), other(inc[1], v), other(inc[2], v)};
}

bool CubicGraph::has_distinct_neighbors(Vertex v) const {
  const auto nb = neighbors(v);
  return nb[0] != nb[1] && nb[1] != nb[2] && nb[0] != nb[2];
}

int CubicGraph::multiplicity(Vertex a, Vertex b) const {
  int count = 0;
  for (EdgeId e : incidence_[a]) count += other(e, a) == b ? 1 : 0;
  return count;
}

bool CubicGraph::is_simple() const {
  for (Vertex v = 0; v < n_; ++v) {
    if (!has_distinct_neighbors(v)) return false;
  }
  return true;
}

std::optional<EdgeId> CubicGraph::find(const EdgeRef& r) const {
  if (r.u < 0 || r.u >= n_) return std::nullopt;
  for (EdgeId e : incidence_[r.u]) {
    if (refs_[e] == r) return e;
  }
  return std::nullopt;
}

EdgeId CubicGraph::id_of(const EdgeRef& r) const {
  auto e = find(r);
  if (!e) throw GraphError("no edge " + r.to_string() + " in graph");
  return *e;
}

std::vector<CubicGraph::Pair> CubicGraph::edge_pairs() const {
  std::vector<Pair> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.emplace_back(e.u, e.v);
  return out;
}

bool operator==(const CubicGraph& a, const CubicGraph& b) {
  if (a.n_ != b.n_ || a.edges_.size() != b.edges_.size()) return false;
  for (size_t i = 0; i < a.edges_.size(); ++i) {
    if (a.refs_[i] != b.refs_[i]) return false;
  }
  return true;
}

std::vector<Triangle> triangles(const CubicGraph& g) {
  std::vector<Triangle> out;
  for (Vertex a = 0; a < g.order(); ++a) {
    auto nb = g.neighbors(a);
    std::sort(nb.begin(), nb.end());
    for (int i = 0; i < 3; ++i) {
      const Vertex b = nb[i];
      if (b <= a || (i > 0 && nb[i - 1] == b)) continue;
      for (int j = i + 1; j < 3; ++j) {
        const Vertex c = nb[j];
        if (c == b || (j > i + 1 && nb[j - 1] == c)) continue;
        if (!g.adjacent(b, c)) continue;
        out.push_back({{a, b, c},
                       {EdgeRef(a, b), EdgeRef(b, c), EdgeRef(a, c)}});
      }
    }
  }
  return out;
}

CubicGraph k4() {
  return CubicGraph::from_adjacency(
      4, std::vector<CubicGraph::Pair>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

CubicGraph theta() {
  return CubicGraph::from_adjacency(
      2, std::vector<CubicGraph::Pair>{{0, 1}, {0, 1}, {0, 1}});
}

CubicGraph prism() {
  return CubicGraph::from_adjacency(
      6, std::vector<CubicGraph::Pair>{
             {0, 1}, {0, 2}, {0, 4}, {1, 2}, {1, 5}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
}

}  // namespace lonely
