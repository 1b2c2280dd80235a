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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>

#include <json.hpp>

#include "lonelyedge/canonical.hpp"
#include "lonelyedge/connectivity.hpp"
#include "lonelyedge/constructions.hpp"
#include "lonelyedge/errors.hpp"
#include "lonelyedge/fixtures.hpp"
#include "lonelyedge/formats.hpp"
#include "lonelyedge/search.hpp"
#include "oracles.hpp"

using namespace lonely;
namespace fs = std::filesystem;

namespace {

std::map<int, int> counts_by_order(const std::vector<CubicGraph>& graphs) {
  std::map<int, int> out;
  for (const auto& g : graphs) ++out[g.order()];
  return out;
}

CubicGraph ep(const char* p) { return extended_prism(ExtensionPattern::parse(p)); }

}  // namespace

TEST_CASE("3-connected cubic graphs by order") {
  const auto graphs = generate_cubic_3connected(12);
  const std::map<int, int> expected{{4, 1}, {6, 2}, {8, 4}, {10, 14}, {12, 57}};
  CHECK(counts_by_order(graphs) == expected);
  for (const auto& g : graphs) {
    CHECK(g.is_simple());
    CHECK(oracle::vertex_three_connected(g));
  }
}

TEST_CASE("generation matches pairing-model sampling") {
  for (int n = 4; n <= 10; n += 2) {
    const auto sampled = oracle::sample_classes(n, 77 + n, n <= 8 ? 20000 : 60000, [](const CubicGraph& g) {
      return oracle::is_simple(g) && oracle::vertex_three_connected(g);
    });
    std::vector<CubicGraph> generated;
    for (const auto& g : generate_cubic_3connected(n)) {
      if (g.order() == n) generated.push_back(g);
    }
    CHECK(sampled.size() == static_cast<int>(generated.size()));
    oracle::ClassSet check;
    for (const auto& g : generated) CHECK(check.insert(g));
    for (const auto& g : sampled.all()) CHECK_FALSE(check.insert(g));
  }
}

TEST_CASE("generation caps") {
  CHECK_THROWS_AS(generate_cubic_3connected(16), CapExceededError);
  CHECK_THROWS_AS(generate_klee(22), CapExceededError);
  CHECK_THROWS_AS(generate_cubic_3connected(7), GraphError);
  CHECK_THROWS_AS(generate_cubic_3connected(2), GraphError);
}

TEST_CASE("Klee-graph generation") {
  const auto klee = generate_klee(14);
  const auto counts = counts_by_order(klee);
  CHECK(counts.at(4) == 1);
  CHECK(counts.at(6) == 1);
  CHECK(counts.at(8) == 1);
  CHECK(counts.at(10) == 3);
  for (const auto& g : klee) CHECK(is_klee(g).has_value());
  // only the bicorn at eight vertices
  std::vector<CubicGraph> eight;
  for (const auto& g : klee) {
    if (g.order() == 8) eight.push_back(g);
  }
  CHECK(is_isomorphic(eight.at(0), named_graph("bicorn")));
  // every Klee-graph up to 12 is 3-connected and appears in the full census
  std::set<CanonicalForm> all;
  for (const auto& g : generate_cubic_3connected(12)) all.insert(canonical_form(g));
  for (const auto& g : klee) {
    if (g.order() <= 12) CHECK(all.contains(canonical_form(g)));
  }
}

TEST_CASE("generation is deterministic across worker counts") {
  const auto a = generate_cubic_3connected(12, {1, false});
  const auto b = generate_cubic_3connected(12, {4, false});
  CHECK(a == b);
  CHECK(generate_klee(14, {1, false}) == generate_klee(14, {3, false}));
}

TEST_CASE("census up to 8") {
  SearchConfig cfg;
  cfg.max_n = 8;
  const auto c = census(cfg);
  CHECK(c.count(4, 6) == 1);
  CHECK(c.count(6, 6) == 1);
  CHECK(c.count(6, 0) == 1);
  CHECK(c.count(8, 5) == 1);
  CHECK(c.count(8, 0) == 3);
  CHECK(c.by_order.at(8).at(5).representatives.front() == to_graph6(canonical_graph(named_graph("bicorn"))));
  const auto six = c.with_l(6);
  REQUIRE(six.size() == 2);
  CHECK(is_isomorphic(six[0]->graph, k4()));
  CHECK(is_isomorphic(six[1]->graph, prism()));
  for (const auto& [n, ks] : c.by_order) {
    for (const auto& [k, bucket] : ks) CHECK(bucket.count() == static_cast<int>(bucket.representatives.size()));
  }
}

TEST_CASE("census up to 12") {
  SearchConfig cfg;
  cfg.max_n = 12;
  cfg.jobs = 2;
  const auto c = census(cfg);
  CHECK(c.count(10, 4) == 2);
  CHECK(c.count(10, 3) == 1);
  CHECK(c.count(12, 2) == 1);
  CHECK(c.count(12, 0) >= 1);
  CHECK(c.max_l() == 6);
  const auto j = nlohmann::json::parse(c.to_json());
  CHECK(j["orders"]["8"]["5"]["count"] == 1);
  CHECK(j["graphs"].size() == c.graphs.size());
  CHECK(c.to_table().find("l=6") != std::string::npos);
  // truncated K4 is reported among the double covered graphs
  bool found = false;
  for (const auto* e : c.with_l(0)) found = found || is_isomorphic(e->graph, named_graph("truncated_k4"));
  CHECK(found);
}

TEST_CASE("census of ingested graph6 files") {
  const auto path = fs::temp_directory_path() / "lonelyedge_ingest.g6";
  {
    std::ofstream out(path);
    out << to_graph6(named_graph("bicorn")) << "\n" << to_graph6(k4()) << "\n";
    out << to_graph6(canonical_graph(named_graph("bicorn"))) << "\n";
    out << to_sparse6(theta()) << "\n";
  }
  SearchConfig cfg;
  cfg.mode = SearchMode::kIngestGraph6;
  cfg.files = {path};
  const auto c = census(cfg);
  CHECK(c.graphs.size() == 3);
  CHECK(c.count(8, 5) == 1);
  CHECK(c.count(4, 6) == 1);
  CHECK(c.count(2, 3) == 1);
  fs::remove(path);
  CHECK(parse_search_mode("klee_only") == SearchMode::kKleeOnly);
  CHECK_THROWS_AS(parse_search_mode("all"), ParseError);
}

TEST_CASE("Klee-only census of graphs with four lonely edges") {
  SearchConfig cfg;
  cfg.max_n = 16;
  cfg.mode = SearchMode::kKleeOnly;
  const auto c = census(cfg);
  CHECK(c.count(10, 4) == 2);
  for (int n = 12; n <= 16; n += 2) {
    CHECK(c.count(n, 4) == 1);
    const auto four = c.with_l(4);
    for (const auto* e : four) {
      if (e->graph.order() == n) {
        CHECK(is_isomorphic(e->graph, extended_prism(ExtensionPattern(std::vector<int>((n - 6) / 2, 3)))));
      }
    }
  }
}

TEST_CASE("children with the same number of lonely edges") {
  CHECK(children_with_same_l(named_graph("pr1")).empty());
  const auto pr2 = children_with_same_l(named_graph("pr2"));
  REQUIRE(pr2.size() == 1);
  CHECK(is_isomorphic(pr2[0].graph, ep("333")));
  const auto bicorn_children = children_with_same_l(named_graph("bicorn"));
  CHECK(bicorn_children.empty());
  const auto desc = descendants_with_same_l(named_graph("tricorn"), 20);
  CHECK(desc.size() == 3);
  for (const auto& d : desc) CHECK(matching_report(d).l() == 3);
}

TEST_CASE("pattern checks by enumeration") {
  CHECK(check_u4_pattern(ExtensionPattern::parse("31")));
  CHECK(check_u4_pattern(ExtensionPattern::parse("3333")));
  CHECK_FALSE(check_u4_pattern(ExtensionPattern::parse("1133")));
  CHECK(check_u3_pattern(ExtensionPattern::parse("313")));
  CHECK(check_u3_pattern(ExtensionPattern::parse("332")));
  CHECK_FALSE(check_u3_pattern(ExtensionPattern::parse("2132")));
}

TEST_CASE("verify_all at order 8 passes its applicable checks") {
  VerifyOptions opts;
  opts.max_n = 8;
  const auto r = verify_all(opts);
  CHECK(r.checks.size() == 13);
  CHECK(r.all_passed());
  int skipped = 0;
  for (const auto& c : r.checks) skipped += c.applicable ? 0 : 1;
  CHECK(skipped == 4);
  const auto j = nlohmann::json::parse(r.to_json());
  CHECK(j["all_passed"] == true);
}

TEST_CASE("verify_all reports a tampered fixture as a failure") {
  const auto dir = fs::temp_directory_path() / "lonelyedge_verify_tampered";
  fs::remove_all(dir);
  fs::create_directories(dir);
  for (const auto& entry : fs::directory_iterator(LONELYEDGE_TEST_DATA_DIR)) {
    fs::copy_file(entry.path(), dir / entry.path().filename());
  }
  {
    std::ofstream out(dir / "bicorn.adj");
    out << "8\n0 1\n0 2\n0 3\n1 2\n1 3\n2 4\n3 5\n4 6\n4 7\n5 6\n5 7\n6 7\n";
  }
  VerifyOptions opts;
  opts.max_n = 8;
  opts.data_dir = dir;
  const auto r = verify_all(opts);
  CHECK_FALSE(r.all_passed());
  CHECK_FALSE(r.checks.at(1).passed);
  CHECK(r.checks.at(0).passed);
  fs::remove_all(dir);
}
