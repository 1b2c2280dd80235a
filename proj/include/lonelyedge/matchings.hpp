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

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "lonelyedge/graph.hpp"

namespace lonely {

using Count = std::uint64_t;

// Edge ids of one perfect matching, ascending.
struct PerfectMatching {
  std::vector<EdgeId> edges;
  friend bool operator==(const PerfectMatching&, const PerfectMatching&) = default;
};

// Backtracking on the lowest uncovered vertex. The visitor receives the edge
// ids in branching order; matchings arrive in a deterministic order and
// parallel edges give distinct matchings. Vertices listed in `removed` are
// treated as already covered.
void for_each_perfect_matching(const CubicGraph& g,
                               const std::function<void(std::span<const EdgeId>)>& visit,
                               std::span<const Vertex> removed = {});

std::vector<PerfectMatching> enumerate_perfect_matchings(const CubicGraph& g);

// Number of perfect matchings of G minus `removed`, by memoized profile
// dynamic programming over a Cuthill-McKee vertex order; does not enumerate.
// Throws std::overflow_error above 2^64 - 1.
Count count_perfect_matchings(const CubicGraph& g, std::span<const Vertex> removed = {});

struct MatchingReport {
  int n = 0;
  Count pm_count = 0;
  std::vector<Count> per_edge;  // indexed by EdgeId
  std::vector<EdgeRef> lonely;  // sorted
  std::vector<EdgeId> lonely_ids;  // same order as `lonely`

  int l() const { return static_cast<int>(lonely.size()); }
  Count min_count() const;
};

// Per-edge counts come from a single enumeration pass when the matching count
// is small and from per-edge counting otherwise. With `strict`, a graph
// without perfect matchings raises NoPerfectMatchingError.
MatchingReport matching_report(const CubicGraph& g, bool strict = false);

// Throws BridgeError on graphs with a bridge.
bool is_matching_double_covered(const CubicGraph& g);

// Number of perfect matchings containing / avoiding edge e.
std::pair<Count, Count> count_pm_with_and_without(const CubicGraph& g, EdgeId e);

// Spanning subgraph in which `root` has degree 3 and every other vertex
// degree 1: the three edges at root plus a perfect matching of G - N[root].
struct VJoin {
  Vertex root = 0;
  std::vector<EdgeId> edges;  // ascending
};

// Empty when root has a parallel edge.
std::vector<VJoin> enumerate_v_joins(const CubicGraph& g, Vertex v);
Count count_v_joins(const CubicGraph& g, Vertex v);

// Whether some v-join contains e.
bool v_join_contains(const CubicGraph& g, Vertex v, EdgeId e);
// True iff no v-join contains e. Throws IncidentError if e touches v.
bool v_join_avoiding(const CubicGraph& g, Vertex v, EdgeId e);

// Number of lonely edges of G, not incident with v, that lie in some v-join.
int lonely_in_v_joins(const CubicGraph& g, Vertex v, const MatchingReport& report);

}  // namespace lonely
