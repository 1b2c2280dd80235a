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

#include "lonelyedge/fixtures.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "fixture_data.hpp"
#include "lonelyedge/constructions.hpp"
#include "lonelyedge/formats.hpp"
#include "lonelyedge/matchings.hpp"

namespace lonely {
namespace {

std::vector<EdgeRef> refs(std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
  std::vector<EdgeRef> out;
  for (auto [a, b] : pairs) out.emplace_back(a, b);
  return out;
}

std::vector<FixtureInfo> build_catalog() {
  return {
      {"k4", "", 4, 4, 6, refs({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}), {},
       "complete graph on four vertices"},
      {"theta", "", 2, 0, 3, {EdgeRef(0, 1, 0), EdgeRef(0, 1, 1), EdgeRef(0, 1, 2)}, {},
       "two vertices joined by three parallel edges"},
      {"prism", "", 6, 2, 6, refs({{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}}), {},
       "triangular prism"},
      {"truncated_k4", "", 12, 4, 0, {}, {}, "truncation of K4, smallest double covered Klee-graph"},
      {"bicorn", "", 8, 2, 5, refs({{0, 1}, {1, 2}, {3, 4}, {5, 6}, {6, 7}}), {},
       "unique graph with five lonely edges"},
      {"tricorn", "", 10, 3, 3, refs({{4, 5}, {6, 7}, {8, 9}}), {},
       "smallest graph with three lonely edges and three triangles"},
      {"pr1", "31", 10, 2, 4, {}, {}, "extended prism (3,1)"},
      {"pr2", "33", 10, 2, 4, {}, {}, "extended prism (3,3)"},
      {"pr3", "332", 12, 2, 3, {}, {}, "extended prism (3,3,2)"},
      {"pr4", "321", 12, 2, 3, {}, {}, "extended prism (3,2,1)"},
      {"ep_313", "313", 12, 2, 3, {}, {}, "extended prism (3,1,3)"},
      {"u2_smallest", "", 12, 3, 2, refs({{0, 1}, {9, 10}}), {},
       "smallest graph with exactly two lonely edges"},
      {"u1_smallest_1", "", 14, 3, 1, refs({{8, 10}}),
       refs({{0, 5}, {1, 2}, {3, 11}, {4, 6}, {7, 12}, {8, 10}, {9, 13}}),
       "first smallest graph with exactly one lonely edge"},
      {"u1_smallest_2", "", 14, 3, 1, refs({{0, 1}}), {},
       "second smallest graph with exactly one lonely edge"},
      {"u1_smallest_3", "", 14, 3, 1, refs({{11, 12}}), {},
       "third smallest graph with exactly one lonely edge"},
      {"gadget_g4", "", 14, 4, 2, refs({{3, 4}, {10, 11}}), {},
       "four-triangle gadget: lonely xy = 3-4 and vw = 11-10, u = 12"},
  };
}

std::string read_data_file(std::string_view name, const std::filesystem::path* dir) {
  if (dir != nullptr) {
    const auto path = *dir / (std::string(name) + ".adj");
    std::ifstream in(path);
    if (!in) throw FixtureError("cannot open fixture file " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  auto text = embedded_fixture_text(name);
  if (!text) throw FixtureError("no embedded data for fixture " + std::string(name));
  return std::string(*text);
}

CubicGraph load(std::string_view name, const std::filesystem::path* dir) {
  const auto& info = fixture_info(name);
  CubicGraph g = info.pattern.empty()
                     ? from_adjacency_text(read_data_file(name, dir))
                     : extended_prism(ExtensionPattern::parse(info.pattern));
  self_check(info, g);
  return g;
}

}  // namespace

const std::vector<FixtureInfo>& fixture_catalog() {
  static const std::vector<FixtureInfo> catalog = build_catalog();
  return catalog;
}

const FixtureInfo& fixture_info(std::string_view name) {
  for (const auto& f : fixture_catalog()) {
    if (f.name == name) return f;
  }
  throw UnknownNameError("unknown graph name '" + std::string(name) + "'");
}

std::vector<std::string> named_graph_names() {
  std::vector<std::string> out;
  for (const auto& f : fixture_catalog()) out.push_back(f.name);
  return out;
}

CubicGraph named_graph(std::string_view name) {
  if (const char* env = std::getenv("LONELYEDGE_DATA_DIR"); env != nullptr && *env != '\0') {
    const std::filesystem::path dir(env);
    return load(name, &dir);
  }
  return load(name, nullptr);
}

CubicGraph named_graph(std::string_view name, const std::filesystem::path& data_dir) {
  return load(name, &data_dir);
}

void self_check(const FixtureInfo& info, const CubicGraph& g) {
  auto fail = [&](const std::string& what) {
    throw FixtureError("fixture '" + info.name + "' failed self-check: " + what);
  };
  if (g.order() != info.n) {
    fail("n = " + std::to_string(g.order()) + ", expected " + std::to_string(info.n));
  }
  const int t = static_cast<int>(triangles(g).size());
  if (t != info.triangles) {
    fail(std::to_string(t) + " triangles, expected " + std::to_string(info.triangles));
  }
  const auto report = matching_report(g);
  if (report.l() != info.l) {
    fail("l = " + std::to_string(report.l()) + ", expected " + std::to_string(info.l));
  }
  if (!info.lonely_matching.empty()) {
    std::vector<int> cover(g.order(), 0);
    for (const auto& ref : info.lonely_matching) {
      const auto id = g.find(ref);
      if (!id) fail("recorded matching uses missing edge " + ref.to_string());
      ++cover[g.edge(*id).u];
      ++cover[g.edge(*id).v];
    }
    if (std::any_of(cover.begin(), cover.end(), [](int c) { return c != 1; })) {
      fail("recorded matching is not perfect");
    }
    for (const auto& ref : info.lonely) {
      if (std::find(info.lonely_matching.begin(), info.lonely_matching.end(), ref) ==
          info.lonely_matching.end()) {
        fail("recorded matching misses lonely edge " + ref.to_string());
      }
    }
  }
  if (!info.lonely.empty() && report.lonely != info.lonely) {
    std::string got;
    for (const auto& r : report.lonely) got += " " + r.to_string();
    fail("lonely edges" + got + " differ from the recorded ones");
  }
}

}  // namespace lonely
