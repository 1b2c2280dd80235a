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

#include <string>

#include "lonelyedge/graph.hpp"
#include "lonelyedge/matchings.hpp"

namespace lonely {

// JSON object with keys n, pm_count, l, double_covered, edges (u, v, slot,
// count per edge in id order) and lonely (u, v, slot).
std::string report_to_json(const CubicGraph& g, const MatchingReport& r, int indent = 2);

// Human-readable summary.
std::string report_to_text(const CubicGraph& g, const MatchingReport& r);

}  // namespace lonely
