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

#include "lonelyedge/connectivity.hpp"

#include <algorithm>

namespace lonely {

const char* to_string(Connectivity c) {
  switch (c) {
    case Connectivity::kHasBridge:
      return "has_bridge";
    case Connectivity::kTwoEdgeConnectedOnly:
      return "two_edge_connected_only";
    case Connectivity::kThreeConnected:
      return "three_connected";
  }
  return "?";
}

std::vector<int> components_without(const CubicGraph& g,
                                    std::span<const EdgeId> removed) {
  std::vector<char> gone(g.size(), 0);
  for (EdgeId e : removed) gone[e] = 1;
  std::vector<int> comp(g.order(), -1);
  std::vector<Vertex> stack;
  int next = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[s] != -1) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(x)) {
        if (gone[e]) continue;
        const Vertex y = g.other(e, x);
        if (comp[y] == -1) {
          comp[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  return comp;
}

namespace {

bool disconnects(const CubicGraph& g, std::span<const EdgeId> removed) {
  const auto comp = components_without(g, removed);
  return std::any_of(comp.begin(), comp.end(), [](int c) { return c != 0; });
}

}  // namespace

bool is_connected(const CubicGraph& g) { return !disconnects(g, {}); }

std::vector<EdgeId> bridges(const CubicGraph& g) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.size(); ++e) {
    const EdgeId cut[] = {e};
    if (disconnects(g, cut)) out.push_back(e);
  }
  return out;
}

bool is_bridgeless(const CubicGraph& g) {
  for (EdgeId e = 0; e < g.size(); ++e) {
    const EdgeId cut[] = {e};
    if (disconnects(g, cut)) return false;
  }
  return true;
}

Connectivity connectivity_class(const CubicGraph& g) {
  if (!is_connected(g)) throw DisconnectedError("graph is disconnected");
  if (!is_bridgeless(g)) return Connectivity::kHasBridge;
  for (EdgeId a = 0; a < g.size(); ++a) {
    for (EdgeId b = a + 1; b < g.size(); ++b) {
      const EdgeId cut[] = {a, b};
      if (disconnects(g, cut)) return Connectivity::kTwoEdgeConnectedOnly;
    }
  }
  return Connectivity::kThreeConnected;
}

std::vector<std::pair<EdgeRef, EdgeRef>> find_two_edge_cuts(const CubicGraph& g) {
  std::vector<std::pair<EdgeRef, EdgeRef>> out;
  for (EdgeId a = 0; a < g.size(); ++a) {
    for (EdgeId b = a + 1; b < g.size(); ++b) {
      const EdgeId cut[] = {a, b};
      if (disconnects(g, cut)) out.emplace_back(g.ref(a), g.ref(b));
    }
  }
  return out;
}

bool is_three_connected(const CubicGraph& g) {
  return is_connected(g) &&
         connectivity_class(g) == Connectivity::kThreeConnected;
}

}  // namespace lonely
