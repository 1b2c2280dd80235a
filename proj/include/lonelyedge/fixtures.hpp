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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lonelyedge/graph.hpp"

namespace lonely {

// Catalog entry for a named graph. Hand-entered graphs are read from
// "<name>.adj" in the data directory; the others are built from an
// extension pattern. Every load is checked against n, the triangle count,
// l and (when listed) the exact lonely edges.
struct FixtureInfo {
  std::string name;
  std::string pattern;  // empty for data-file fixtures
  int n = 0;
  int triangles = 0;
  int l = 0;
  std::vector<EdgeRef> lonely;  // empty when not pinned
  // A perfect matching containing every lonely edge, when recorded.
  std::vector<EdgeRef> lonely_matching;
  std::string description;
};

const std::vector<FixtureInfo>& fixture_catalog();
// Throws UnknownNameError.
const FixtureInfo& fixture_info(std::string_view name);
std::vector<std::string> named_graph_names();

// Data directory: LONELYEDGE_DATA_DIR if set, otherwise the copies compiled
// into the library.
CubicGraph named_graph(std::string_view name);
CubicGraph named_graph(std::string_view name, const std::filesystem::path& data_dir);

// Throws FixtureError with a diagnostic on mismatch.
void self_check(const FixtureInfo& info, const CubicGraph& g);

}  // namespace lonely
