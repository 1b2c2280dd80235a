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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lonelyedge/graph.hpp"
#include "lonelyedge/matchings.hpp"
#include "lonelyedge/patterns.hpp"

namespace lonely {

inline constexpr int kCapThreeConnected = 14;
inline constexpr int kCapKlee = 20;

struct GenerationOptions {
  int jobs = 1;        // worker threads; 0 means hardware concurrency
  bool force = false;  // allow max_n above the cap
};

// One canonically labeled representative per isomorphism class of simple
// 3-connected cubic graphs on 4..max_n vertices, built by edge insertion
// from K4. Ordered by order, then by canonical form. Throws
// CapExceededError above kCapThreeConnected unless forced.
std::vector<CubicGraph> generate_cubic_3connected(int max_n, const GenerationOptions& opts = {});

// Same for Klee-graphs, built by expanding every vertex of every graph of
// the previous order. Cap kCapKlee.
std::vector<CubicGraph> generate_klee(int max_n, const GenerationOptions& opts = {});

// Generic edge-insertion step: subdivide two distinct edges and join the two
// new vertices (ids n and n + 1).
CubicGraph insert_edge(const CubicGraph& g, EdgeId e, EdgeId f);

enum class SearchMode { kAll3Connected, kKleeOnly, kIngestGraph6 };
const char* to_string(SearchMode m);
// Accepts "all_3connected", "klee_only", "ingest_graph6". Throws ParseError.
SearchMode parse_search_mode(std::string_view s);

struct SearchConfig {
  int max_n = 12;  // even, >= 4; ignored for ingest_graph6
  SearchMode mode = SearchMode::kAll3Connected;
  int jobs = 1;
  bool force = false;
  std::vector<std::filesystem::path> files;  // ingest_graph6 input
};

struct CensusEntry {
  CubicGraph graph;
  std::string code;  // graph6, or sparse6 for multigraphs
  Count pm_count = 0;
  int l = 0;
  bool three_connected = false;
  bool is_klee = false;
  bool double_covered = false;
};

struct CensusBucket {
  std::vector<std::string> representatives;
  int count() const { return static_cast<int>(representatives.size()); }
};

// Buckets hold 3-connected graphs only; k = 0 collects the double covered
// ones. Ingested graphs that are not 3-connected appear in `graphs` only.
struct CensusResult {
  SearchMode mode = SearchMode::kAll3Connected;
  int max_n = 0;
  std::map<int, std::map<int, CensusBucket>> by_order;  // n -> k -> bucket
  std::vector<CensusEntry> graphs;                       // by order, canonical form

  int count(int n, int k) const;
  std::vector<const CensusEntry*> with_l(int k) const;
  int max_l() const;
  std::string to_json(int indent = 2) const;
  std::string to_table() const;
};

CensusResult census(const SearchConfig& config);

struct Child {
  Vertex vertex = 0;
  CubicGraph graph;
};

// Children G^v with p_v = 0, one per isomorphism class (smallest v kept).
std::vector<Child> children_with_same_l(const CubicGraph& g);

// Every descendant reached through children_with_same_l with at most max_n
// vertices, one per isomorphism class, ordered by order then canonical form.
std::vector<CubicGraph> descendants_with_same_l(const CubicGraph& g, int max_n);

// l(extended_prism(p)) == 4 and == 3, by enumeration.
bool check_u4_pattern(const ExtensionPattern& p);
bool check_u3_pattern(const ExtensionPattern& p);

struct CheckResult {
  int id = 0;
  std::string name;
  bool applicable = true;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyOptions {
  int max_n = 12;
  int jobs = 1;
  bool force = false;
  std::optional<std::filesystem::path> data_dir;  // fixtures; default as named_graph
};

struct VerifyReport {
  int max_n = 0;
  std::vector<CheckResult> checks;
  // True when every applicable check passed.
  bool all_passed() const;
  std::string to_json(int indent = 2) const;
  std::string to_text() const;
};

// Runs every theorem check whose order requirement fits max_n. Failures,
// including exceptions, are reported as entries rather than thrown.
VerifyReport verify_all(const VerifyOptions& opts);

}  // namespace lonely
