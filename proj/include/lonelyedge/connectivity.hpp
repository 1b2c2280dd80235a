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

#include <span>
#include <utility>
#include <vector>

#include "lonelyedge/graph.hpp"

namespace lonely {

enum class Connectivity { kHasBridge, kTwoEdgeConnectedOnly, kThreeConnected };

const char* to_string(Connectivity c);

// Connected components of G minus the given edges; component[v] is a dense
// component id assigned in increasing order of the smallest vertex.
std::vector<int> components_without(const CubicGraph& g,
                                    std::span<const EdgeId> removed);
bool is_connected(const CubicGraph& g);

std::vector<EdgeId> bridges(const CubicGraph& g);
bool is_bridgeless(const CubicGraph& g);

// For cubic graphs, 3-edge-connected coincides with 3-connected.
// Throws DisconnectedError.
Connectivity connectivity_class(const CubicGraph& g);

// Every unordered pair of edges whose removal disconnects G (pairs ordered by
// edge id). Assumes G is bridgeless.
std::vector<std::pair<EdgeRef, EdgeRef>> find_two_edge_cuts(const CubicGraph& g);

bool is_three_connected(const CubicGraph& g);

}  // namespace lonely
