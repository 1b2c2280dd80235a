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

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lonelyedge/graph.hpp"

namespace lonely {

// Isomorphism-invariant fingerprint of a labeled multigraph: the
// lexicographically smallest upper-triangle multiplicity matrix reachable by
// individualization-refinement. Equal iff the graphs are isomorphic.
struct CanonicalForm {
  std::vector<std::uint8_t> bytes;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  std::string to_hex() const;
};

CanonicalForm canonical_form(const CubicGraph& g);

// position[v] is the canonical position of vertex v.
std::vector<Vertex> canonical_labeling(const CubicGraph& g);

// The graph relabeled canonically, edges sorted; isomorphic inputs give
// labeled-equal outputs.
CubicGraph canonical_graph(const CubicGraph& g);

bool is_isomorphic(const CubicGraph& a, const CubicGraph& b);

}  // namespace lonely

template <>
struct std::hash<lonely::CanonicalForm> {
  size_t operator()(const lonely::CanonicalForm& f) const noexcept {
    size_t h = 1469598103934665603ull;
    for (auto b : f.bytes) h = (h ^ b) * 1099511628211ull;
    return h;
  }
};
