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

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lonelyedge/canonical.hpp"
#include "lonelyedge/connectivity.hpp"
#include "lonelyedge/constructions.hpp"
#include "lonelyedge/fixtures.hpp"
#include "lonelyedge/formats.hpp"
#include "lonelyedge/matchings.hpp"
#include "lonelyedge/report.hpp"
#include "lonelyedge/search.hpp"

namespace {

using namespace lonely;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Source {
  std::string name;
  std::string g6;
  std::string file;
};

void add_source(CLI::App* cmd, Source& src) {
  cmd->add_option("--name", src.name, "Named fixture graph");
  cmd->add_option("--g6", src.g6, "graph6 or sparse6 string");
  cmd->add_option("--file", src.file, "Graph file (graph6/sparse6 lines, adjacency, DOT or JSON)");
}

std::string slurp(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Fixture name, then graph6/sparse6 string.
CubicGraph resolve_graph(const std::string& text) {
  for (const auto& f : fixture_catalog()) {
    if (f.name == text) return named_graph(text);
  }
  return parse_graph6_or_sparse6(text);
}

std::vector<CubicGraph> load_graphs(const Source& src) {
  const int given = !src.name.empty() + !src.g6.empty() + !src.file.empty();
  if (given > 1) throw UsageError("give at most one of --name, --g6, --file");
  if (!src.name.empty()) return {named_graph(src.name)};
  if (!src.g6.empty()) return {parse_graph6_or_sparse6(src.g6)};
  if (!src.file.empty()) {
    std::ifstream in(src.file);
    if (!in) throw UsageError("cannot open " + src.file);
    return read_graphs(slurp(in));
  }
  return read_graphs(slurp(std::cin));
}

CubicGraph load_one(const Source& src) {
  auto graphs = load_graphs(src);
  if (graphs.size() != 1) throw UsageError("expected exactly one input graph");
  return std::move(graphs.front());
}

void write_graph(const CubicGraph& g, const std::string& format) {
  if (format == "g6") {
    std::cout << to_graph6_or_sparse6(g) << "\n";
  } else if (format == "s6") {
    std::cout << to_sparse6(g) << "\n";
  } else if (format == "adj") {
    std::cout << to_adjacency(g);
  } else if (format == "dot") {
    const auto r = matching_report(g);
    std::cout << to_dot(g, r.lonely_ids);
  } else if (format == "json") {
    std::cout << report_to_json(g, matching_report(g)) << "\n";
  }
}

void add_format(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"g6", "s6", "adj", "dot", "json"}))
      ->capture_default_str();
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(s);
  while (std::getline(in, token, ',')) {
    const auto dash = token.find('-');
    try {
      if (dash != std::string::npos) {
        out.push_back(std::stoi(token.substr(0, dash)));
        out.push_back(std::stoi(token.substr(dash + 1)));
      } else {
        out.push_back(std::stoi(token));
      }
    } catch (const std::exception&) {
      throw UsageError("bad vertex list '" + s + "'");
    }
  }
  return out;
}

EdgeRef parse_edge(const std::string& s) {
  const auto v = parse_ints(s);
  if (v.size() != 2) throw UsageError("edge must be written u-v, got '" + s + "'");
  return EdgeRef(v[0], v[1]);
}

int positive(const std::string& s) {
  try {
    std::size_t used = 0;
    const int k = std::stoi(s, &used);
    if (used == s.size()) return k;
  } catch (const std::exception&) {
  }
  throw UsageError("expected an integer, got '" + s + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lonely edges of bridgeless cubic graphs"};
  app.require_subcommand(1);
  std::string format = "g6";
  bool json = false;

  // analyze
  Source analyze_src;
  std::optional<int> expect_l;
  auto* analyze = app.add_subcommand("analyze", "Perfect matching report");
  add_source(analyze, analyze_src);
  analyze->add_option("--expect-l", expect_l, "Exit 1 unless every input has this many lonely edges");
  analyze->add_flag("--json", json, "JSON output");

  // construct
  std::string kind, arg;
  auto* construct = app.add_subcommand("construct", "Build a graph");
  construct->add_option("kind", kind, "named | extended-prism | k-lonely | u1-family | u2-family")
      ->required()
      ->check(CLI::IsMember({"named", "extended-prism", "k-lonely", "u1-family", "u2-family"}));
  construct->add_option("arg", arg, "Fixture name, pattern digits or k")->required();
  add_format(construct, format);

  // expand
  Source expand_src;
  int vertex = 0;
  auto* expand_cmd = app.add_subcommand("expand", "Replace a vertex by a triangle");
  add_source(expand_cmd, expand_src);
  expand_cmd->add_option("--vertex", vertex, "Vertex to expand")->required();
  add_format(expand_cmd, format);

  // contract
  Source contract_src;
  std::string triangle_arg;
  auto* contract = app.add_subcommand("contract", "Contract a triangle");
  add_source(contract, contract_src);
  contract->add_option("--triangle", triangle_arg, "Vertices a,b,c (default: first triangle)");
  add_format(contract, format);

  // connect
  std::string first, first_edge, second, second_edge;
  bool swap = false;
  auto* connect = app.add_subcommand("connect", "2-cut-connection of two graphs");
  connect->add_option("--first", first, "Fixture name or graph6/sparse6")->required();
  connect->add_option("--first-edge", first_edge, "Edge u-v of the first graph")->required();
  connect->add_option("--second", second, "Fixture name or graph6/sparse6")->required();
  connect->add_option("--second-edge", second_edge, "Edge u-v of the second graph")->required();
  connect->add_flag("--swap", swap, "Join x1 with the larger end of the second edge");
  add_format(connect, format);

  // reduce
  Source reduce_src;
  std::string cut_arg;
  auto* reduce = app.add_subcommand("reduce", "2-cut-reduction");
  add_source(reduce, reduce_src);
  reduce->add_option("--cut", cut_arg, "Two edges u-v,x-y (default: first 2-edge-cut)");
  add_format(reduce, format);

  // children
  Source children_src;
  auto* children = app.add_subcommand("children", "Children G^v with the same number of lonely edges");
  add_source(children, children_src);
  children->add_flag("--json", json, "JSON output");

  // search
  SearchConfig search_cfg;
  std::string mode;
  std::vector<std::string> ingest;
  auto* search = app.add_subcommand("search", "Census of lonely edge counts");
  search->add_option("--max-n", search_cfg.max_n, "Largest order")->capture_default_str();
  search->add_option("--mode", mode,
                     "all_3connected | klee_only | ingest_graph6 (default: klee_only above n = 12)")
      ->check(CLI::IsMember({"all_3connected", "klee_only", "ingest_graph6"}));
  search->add_option("--jobs", search_cfg.jobs, "Worker threads, 0 for all cores")->capture_default_str();
  search->add_option("--file", ingest, "graph6/sparse6 list for ingest_graph6");
  search->add_flag("--force", search_cfg.force, "Allow max-n above the cap");
  search->add_flag("--json", json, "JSON output");

  // verify
  VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "Run the theorem checks");
  verify->add_option("--max-n", verify_opts.max_n, "Largest order")->capture_default_str();
  verify->add_option("--jobs", verify_opts.jobs, "Worker threads, 0 for all cores")->capture_default_str();
  verify->add_flag("--force", verify_opts.force, "Allow max-n above the cap");
  verify->add_flag("--json", json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze) {
      const auto graphs = load_graphs(analyze_src);
      bool ok = true;
      nlohmann::json all = nlohmann::json::array();
      for (const auto& g : graphs) {
        const auto r = matching_report(g);
        if (expect_l && r.l() != *expect_l) ok = false;
        if (json) {
          all.push_back(nlohmann::json::parse(report_to_json(g, r)));
        } else {
          std::cout << report_to_text(g, r);
          if (graphs.size() > 1) std::cout << "\n";
        }
      }
      if (json) std::cout << (graphs.size() == 1 ? all.front() : all).dump(2) << "\n";
      if (!ok) {
        std::cerr << "lonely edge count differs from --expect-l " << *expect_l << "\n";
        return kExitFailed;
      }
    } else if (*construct) {
      CubicGraph g = k4();
      if (kind == "named") {
        g = named_graph(arg);
      } else if (kind == "extended-prism") {
        g = extended_prism(ExtensionPattern::parse(arg));
      } else if (kind == "k-lonely") {
        g = build_k_lonely(positive(arg));
      } else if (kind == "u1-family") {
        g = build_u1_family(positive(arg));
      } else {
        g = build_u2_family(positive(arg));
      }
      write_graph(g, format);
    } else if (*expand_cmd) {
      write_graph(expand(load_one(expand_src), vertex).graph, format);
    } else if (*contract) {
      const auto g = load_one(contract_src);
      Triangle t;
      if (triangle_arg.empty()) {
        const auto ts = triangles(g);
        if (ts.empty()) throw UsageError("graph has no triangle");
        t = ts.front();
      } else {
        const auto v = parse_ints(triangle_arg);
        if (v.size() != 3) throw UsageError("--triangle needs three vertices");
        t.vertices = {v[0], v[1], v[2]};
        std::sort(t.vertices.begin(), t.vertices.end());
      }
      write_graph(contract_triangle(g, t).graph, format);
    } else if (*connect) {
      const auto c = two_cut_connect(resolve_graph(first), parse_edge(first_edge),
                                     resolve_graph(second), parse_edge(second_edge), swap);
      write_graph(c.graph, format);
    } else if (*reduce) {
      const auto g = load_one(reduce_src);
      std::pair<EdgeRef, EdgeRef> cut;
      if (cut_arg.empty()) {
        const auto cuts = find_two_edge_cuts(g);
        if (cuts.empty()) throw UsageError("graph has no 2-edge-cut");
        cut = cuts.front();
      } else {
        const auto v = parse_ints(cut_arg);
        if (v.size() != 4) throw UsageError("--cut needs two edges u-v,x-y");
        cut = {EdgeRef(v[0], v[1]), EdgeRef(v[2], v[3])};
      }
      const auto r = two_cut_reduce(g, cut);
      write_graph(r.first, format);
      write_graph(r.second, format);
    } else if (*children) {
      const auto g = load_one(children_src);
      const auto kids = children_with_same_l(g);
      if (json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : kids) arr.push_back({{"vertex", c.vertex}, {"code", to_graph6_or_sparse6(c.graph)}});
        std::cout << arr.dump(2) << "\n";
      } else {
        for (const auto& c : kids) std::cout << c.vertex << " " << to_graph6_or_sparse6(c.graph) << "\n";
      }
    } else if (*search) {
      if (mode.empty()) mode = search_cfg.max_n > 12 ? "klee_only" : "all_3connected";
      search_cfg.mode = parse_search_mode(mode);
      for (const auto& f : ingest) search_cfg.files.emplace_back(f);
      if (search_cfg.mode == SearchMode::kIngestGraph6 && search_cfg.files.empty()) {
        throw UsageError("ingest_graph6 needs --file");
      }
      if (search_cfg.force) std::cerr << "warning: generation cap overridden\n";
      const auto result = census(search_cfg);
      std::cout << (json ? result.to_json() + "\n" : result.to_table());
    } else if (*verify) {
      if (verify_opts.max_n > kCapThreeConnected && !verify_opts.force) {
        throw CapExceededError("verify: max-n " + std::to_string(verify_opts.max_n) +
                               " exceeds the cap " + std::to_string(kCapThreeConnected) +
                               " (use --force)");
      }
      if (verify_opts.force) std::cerr << "warning: generation cap overridden\n";
      const auto report = verify_all(verify_opts);
      std::cout << (json ? report.to_json() + "\n" : report.to_text());
      return report.all_passed() ? kExitOk : kExitFailed;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitOk;
}
