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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lonelyedge/canonical.hpp"
#include "lonelyedge/connectivity.hpp"
#include "lonelyedge/constructions.hpp"
#include "lonelyedge/fixtures.hpp"
#include "lonelyedge/formats.hpp"
#include "lonelyedge/matchings.hpp"
#include "lonelyedge/search.hpp"

namespace py = pybind11;
using namespace lonely;

namespace {

py::tuple ref_tuple(const EdgeRef& r) { return py::make_tuple(r.u, r.v, r.slot); }

EdgeRef to_ref(const std::tuple<Vertex, Vertex, int>& t) {
  return EdgeRef(std::get<0>(t), std::get<1>(t), std::get<2>(t));
}

py::dict report_dict(const CubicGraph& g, bool strict) {
  const auto r = matching_report(g, strict);
  py::dict d;
  d["n"] = r.n;
  d["pm_count"] = r.pm_count;
  d["l"] = r.l();
  py::list lonely;
  for (const auto& e : r.lonely) lonely.append(ref_tuple(e));
  d["lonely"] = lonely;
  py::list counts;
  for (EdgeId e = 0; e < g.size(); ++e) counts.append(py::make_tuple(ref_tuple(g.ref(e)), r.per_edge[e]));
  d["edge_counts"] = counts;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Lonely edges in cubic graphs";

  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<UnknownNameError>(m, "UnknownNameError", PyExc_KeyError);
  py::register_exception<CapExceededError>(m, "CapExceededError", PyExc_ValueError);
  py::register_exception<FixtureError>(m, "FixtureError", PyExc_RuntimeError);

  py::class_<CubicGraph>(m, "CubicGraph")
      .def(py::init([](int n, const std::vector<CubicGraph::Pair>& edges) {
             return CubicGraph::from_adjacency(n, edges);
           }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("order", &CubicGraph::order)
      .def_property_readonly("size", &CubicGraph::size)
      .def("edges", &CubicGraph::edge_pairs)
      .def("neighbors", &CubicGraph::neighbors)
      .def("multiplicity", &CubicGraph::multiplicity)
      .def("is_simple", &CubicGraph::is_simple)
      .def("__eq__", [](const CubicGraph& a, const CubicGraph& b) { return a == b; })
      .def("__repr__", [](const CubicGraph& g) {
        return "CubicGraph(n=" + std::to_string(g.order()) + ", code='" + to_graph6_or_sparse6(g) + "')";
      });

  m.def("from_code", &parse_graph6_or_sparse6, py::arg("code"), "graph6 or sparse6 line");
  m.def("to_code", &to_graph6_or_sparse6, py::arg("graph"));
  m.def("from_adjacency_text", &from_adjacency_text, py::arg("text"));
  m.def("to_adjacency", &to_adjacency, py::arg("graph"));
  m.def("read_graphs", &read_graphs, py::arg("text"));

  m.def("named_graph", py::overload_cast<std::string_view>(&named_graph), py::arg("name"));
  m.def("named_graph_names", &named_graph_names);

  m.def("matching_report", &report_dict, py::arg("graph"), py::arg("strict") = false);
  m.def("count_perfect_matchings",
        [](const CubicGraph& g) { return count_perfect_matchings(g); }, py::arg("graph"));
  m.def("lonely_edges", [](const CubicGraph& g) {
    py::list out;
    for (const auto& e : matching_report(g).lonely) out.append(ref_tuple(e));
    return out;
  }, py::arg("graph"));
  m.def("is_matching_double_covered", &is_matching_double_covered, py::arg("graph"));
  m.def("is_three_connected", &is_three_connected, py::arg("graph"));
  m.def("is_isomorphic", &is_isomorphic, py::arg("a"), py::arg("b"));
  m.def("canonical_form", [](const CubicGraph& g) { return canonical_form(g).to_hex(); }, py::arg("graph"));
  m.def("is_klee", [](const CubicGraph& g) { return is_klee(g).has_value(); }, py::arg("graph"));

  m.def("expand", [](const CubicGraph& g, Vertex v) { return expand(g, v).graph; }, py::arg("graph"),
        py::arg("vertex"));
  m.def("extended_prism",
        [](const std::string& pattern) { return extended_prism(ExtensionPattern::parse(pattern)); },
        py::arg("pattern"));
  m.def("two_cut_connect",
        [](const CubicGraph& g1, const std::tuple<Vertex, Vertex, int>& e1, const CubicGraph& g2,
           const std::tuple<Vertex, Vertex, int>& e2, bool swap) {
          return two_cut_connect(g1, to_ref(e1), g2, to_ref(e2), swap).graph;
        },
        py::arg("g1"), py::arg("e1"), py::arg("g2"), py::arg("e2"), py::arg("swap_second") = false);
  m.def("build_k_lonely", &build_k_lonely, py::arg("k"));
  m.def("build_u2_family", &build_u2_family, py::arg("k"));
  m.def("build_u1_family", &build_u1_family, py::arg("k"));
  m.def("u4_pattern_predicate",
        [](const std::string& p) { return u4_pattern_predicate(ExtensionPattern::parse(p)); });
  m.def("u3_pattern_predicate",
        [](const std::string& p) { return u3_pattern_predicate(ExtensionPattern::parse(p)); });

  m.def("census_json",
        [](int max_n, const std::string& mode, int jobs, bool force) {
          SearchConfig cfg;
          cfg.max_n = max_n;
          cfg.mode = parse_search_mode(mode);
          cfg.jobs = jobs;
          cfg.force = force;
          py::gil_scoped_release release;
          return census(cfg).to_json();
        },
        py::arg("max_n") = 12, py::arg("mode") = "all_3connected", py::arg("jobs") = 1,
        py::arg("force") = false);
  m.def("verify_json",
        [](int max_n, int jobs, bool force) {
          VerifyOptions opts;
          opts.max_n = max_n;
          opts.jobs = jobs;
          opts.force = force;
          py::gil_scoped_release release;
          return verify_all(opts).to_json();
        },
        py::arg("max_n") = 12, py::arg("jobs") = 1, py::arg("force") = false);
}
