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

#include "lonelyedge/report.hpp"

#include <sstream>

#include <json.hpp>

#include "lonelyedge/connectivity.hpp"

namespace lonely {

std::string report_to_json(const CubicGraph& g, const MatchingReport& r, int indent) {
  nlohmann::json j;
  j["n"] = r.n;
  j["pm_count"] = r.pm_count;
  j["l"] = r.l();
  j["double_covered"] = r.min_count() >= 2;
  auto edges = nlohmann::json::array();
  for (EdgeId e = 0; e < g.size(); ++e) {
    const auto ref = g.ref(e);
    edges.push_back({{"u", ref.u}, {"v", ref.v}, {"slot", ref.slot}, {"count", r.per_edge[e]}});
  }
  j["edges"] = std::move(edges);
  auto lonely = nlohmann::json::array();
  for (const auto& ref : r.lonely) {
    lonely.push_back({{"u", ref.u}, {"v", ref.v}, {"slot", ref.slot}});
  }
  j["lonely"] = std::move(lonely);
  return j.dump(indent);
}

std::string report_to_text(const CubicGraph& g, const MatchingReport& r) {
  std::ostringstream out;
  out << "n: " << r.n << "\n";
  out << "perfect matchings: " << r.pm_count << "\n";
  out << "lonely edges (l = " << r.l() << "):";
  for (const auto& ref : r.lonely) out << " " << ref.to_string();
  out << "\n";
  out << "double covered: " << (r.min_count() >= 2 ? "yes" : "no") << "\n";
  if (is_connected(g)) out << "connectivity: " << to_string(connectivity_class(g)) << "\n";
  return out.str();
}

}  // namespace lonely
