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

#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lonelyedge/graph.hpp"

namespace lonely {

// graph6 (simple graphs only) and sparse6 (multigraphs), encoded exactly as
// nauty's writers do. Readers accept an optional ">>graph6<<" /
// ">>sparse6<<" header and a trailing newline. Errors raise ParseError;
// a valid encoding of a non-cubic graph raises the graph_core errors.
std::string to_graph6(const CubicGraph& g);
std::string to_sparse6(const CubicGraph& g);
CubicGraph from_graph6(std::string_view s);
CubicGraph from_sparse6(std::string_view s);
// Dispatches on a leading ':' (sparse6) or ';' (incremental sparse6 is
// rejected).
CubicGraph parse_graph6_or_sparse6(std::string_view s);
// graph6 when the graph is simple, sparse6 otherwise.
std::string to_graph6_or_sparse6(const CubicGraph& g);

// Plain adjacency text: first line "n", then one "u v" line per edge. Lines
// starting with '#' and blank lines are ignored on input.
std::string to_adjacency(const CubicGraph& g);
CubicGraph from_adjacency_text(std::string_view text);

// Graphviz output; edges listed in `dashed` get style=dashed.
std::string to_dot(const CubicGraph& g, std::span<const EdgeId> dashed = {},
                   std::string_view name = "G");

// Reads back to_dot output: vertex statements "v;" and edges "u -- v".
CubicGraph from_dot(std::string_view text);

// Reads the "n" and "edges" (u, v per entry) members of a JSON report.
CubicGraph from_json(std::string_view text);

// Detects the format: '{' starts JSON, "graph" starts DOT, a leading integer
// line is adjacency text, anything else is one graph6/sparse6 per line.
std::vector<CubicGraph> read_graphs(std::string_view text);

// Reads one graph per non-empty line in graph6/sparse6.
std::vector<CubicGraph> read_graph6_stream(std::istream& in);

}  // namespace lonely
