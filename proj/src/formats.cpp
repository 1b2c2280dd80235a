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

#include "lonelyedge/formats.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include <json.hpp>

namespace lonely {
namespace {

constexpr int kBias = 63;

void append_size(std::string& out, long n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kBias));
    }
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kBias));
    }
  }
}

std::string_view strip(std::string_view s, std::string_view header) {
  if (s.substr(0, header.size()) == header) s.remove_prefix(header.size());
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Parses N(n) and advances s past it.
long read_size(std::string_view& s) {
  auto digit = [&](size_t i) {
    if (i >= s.size() || s[i] < kBias || s[i] > 126) {
      throw ParseError("truncated or invalid size field");
    }
    return static_cast<long>(s[i] - kBias);
  };
  if (s.empty()) throw ParseError("empty graph string");
  if (s[0] != 126) {
    long n = digit(0);
    s.remove_prefix(1);
    return n;
  }
  if (s.size() > 1 && s[1] == 126) {
    long n = 0;
    for (size_t i = 2; i < 8; ++i) n = (n << 6) | digit(i);
    s.remove_prefix(8);
    return n;
  }
  long n = 0;
  for (size_t i = 1; i < 4; ++i) n = (n << 6) | digit(i);
  s.remove_prefix(4);
  return n;
}

int bits_for(long n) {
  int nb = 0;
  for (long i = n - 1; i > 0; i >>= 1) ++nb;
  return nb;
}

// Packs bits MSB-first into 6-bit groups.
class SixBitWriter {
 public:
  explicit SixBitWriter(std::string& out) : out_(out) {}
  void put(bool bit) {
    x_ = (x_ << 1) | (bit ? 1 : 0);
    if (--k_ == 0) {
      out_.push_back(static_cast<char>(x_ + kBias));
      x_ = 0;
      k_ = 6;
    }
  }
  void put_value(long value, int width) {
    for (int b = width - 1; b >= 0; --b) put((value >> b) & 1);
  }
  int free_bits() const { return k_; }
  bool partial() const { return k_ != 6; }
  void flush_with(int pad) {
    out_.push_back(static_cast<char>(((x_ << k_) | pad) + kBias));
    x_ = 0;
    k_ = 6;
  }

 private:
  std::string& out_;
  int x_ = 0;
  int k_ = 6;
};

}  // namespace

std::string to_graph6(const CubicGraph& g) {
  if (!g.is_simple()) throw GraphError("graph6 requires a simple graph");
  std::string out;
  append_size(out, g.order());
  SixBitWriter w(out);
  for (Vertex j = 1; j < g.order(); ++j) {
    for (Vertex i = 0; i < j; ++i) w.put(g.adjacent(i, j));
  }
  if (w.partial()) w.flush_with(0);
  return out;
}

CubicGraph from_graph6(std::string_view s) {
  s = strip(s, ">>graph6<<");
  const long n = read_size(s);
  const long needed = (n * (n - 1) / 2 + 5) / 6;
  if (static_cast<long>(s.size()) != needed) {
    throw ParseError("graph6 body has " + std::to_string(s.size()) +
                     " bytes, expected " + std::to_string(needed));
  }
  std::vector<CubicGraph::Pair> pairs;
  long bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const char c = s[bit / 6];
      if (c < kBias || c > 126) throw ParseError("invalid graph6 character");
      if (((c - kBias) >> (5 - bit % 6)) & 1) pairs.emplace_back(i, j);
    }
  }
  return CubicGraph::from_adjacency(static_cast<int>(n), pairs);
}

std::string to_sparse6(const CubicGraph& g) {
  const long n = g.order();
  const int nb = bits_for(n);
  std::vector<CubicGraph::Pair> pairs;
  for (const auto& e : g.edges()) {
    pairs.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  }
  // Edges (i, j) with i <= j, ordered by j then i.
  std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second < b.second : a.first < b.first;
  });
  std::string out = ":";
  append_size(out, n);
  SixBitWriter w(out);
  long lastj = 0;
  for (const auto& [i, j] : pairs) {
    if (j == lastj) {
      w.put(false);
    } else {
      w.put(true);
      if (j > lastj + 1) {
        w.put_value(j, nb);
        w.put(false);
      }
      lastj = j;
    }
    w.put_value(i, nb);
  }
  if (w.partial()) {
    const int k = w.free_bits();
    if (k >= nb + 1 && lastj == n - 2 && n == (1L << nb)) {
      w.flush_with((1 << (k - 1)) - 1);
    } else {
      w.flush_with((1 << k) - 1);
    }
  }
  return out;
}

CubicGraph from_sparse6(std::string_view s) {
  s = strip(s, ">>sparse6<<");
  if (s.empty() || s[0] != ':') throw ParseError("sparse6 must start with ':'");
  s.remove_prefix(1);
  const long n = read_size(s);
  const int nb = bits_for(n);
  const long total_bits = static_cast<long>(s.size()) * 6;
  auto bit_at = [&](long pos) {
    const char c = s[pos / 6];
    if (c < kBias || c > 126) throw ParseError("invalid sparse6 character");
    return ((c - kBias) >> (5 - pos % 6)) & 1;
  };
  std::vector<CubicGraph::Pair> pairs;
  long pos = 0;
  long v = 0;
  while (pos + 1 + nb <= total_bits) {
    const int b = bit_at(pos++);
    long x = 0;
    for (int i = 0; i < nb; ++i) x = (x << 1) | bit_at(pos++);
    if (b) ++v;
    if (x > v) {
      v = x;
    } else if (v < n) {
      pairs.emplace_back(static_cast<Vertex>(x), static_cast<Vertex>(v));
    }
  }
  return CubicGraph::from_adjacency(static_cast<int>(n), pairs);
}

CubicGraph parse_graph6_or_sparse6(std::string_view s) {
  auto body = strip(strip(s, ">>graph6<<"), ">>sparse6<<");
  if (body.empty()) throw ParseError("empty graph string");
  if (body[0] == ';') throw ParseError("incremental sparse6 is not supported");
  if (body[0] == ':') return from_sparse6(body);
  return from_graph6(body);
}

std::string to_graph6_or_sparse6(const CubicGraph& g) {
  return g.is_simple() ? to_graph6(g) : to_sparse6(g);
}

std::string to_adjacency(const CubicGraph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (const auto& e : g.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

CubicGraph from_adjacency_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  long n = -1;
  std::vector<CubicGraph::Pair> pairs;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    if (n < 0) {
      if (!(fields >> n) || n < 0) {
        throw ParseError("line " + std::to_string(lineno) + ": expected vertex count");
      }
      continue;
    }
    long a = 0, b = 0;
    if (!(fields >> a >> b)) {
      throw ParseError("line " + std::to_string(lineno) + ": expected 'u v'");
    }
    std::string rest;
    if (fields >> rest) {
      throw ParseError("line " + std::to_string(lineno) + ": trailing text");
    }
    pairs.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  if (n < 0) throw ParseError("missing vertex count");
  return CubicGraph::from_adjacency(static_cast<int>(n), pairs);
}

std::string to_dot(const CubicGraph& g, std::span<const EdgeId> dashed,
                   std::string_view name) {
  std::vector<char> is_dashed(g.size(), 0);
  for (EdgeId e : dashed) is_dashed[e] = 1;
  std::string out = "graph " + std::string(name) + " {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out += "  " + std::to_string(v) + ";\n";
  }
  for (EdgeId e = 0; e < g.size(); ++e) {
    out += "  " + std::to_string(g.edge(e).u) + " -- " + std::to_string(g.edge(e).v);
    if (is_dashed[e]) out += " [style=dashed]";
    out += ";\n";
  }
  out += "}\n";
  return out;
}

CubicGraph from_dot(std::string_view text) {
  const auto open = text.find('{');
  const auto close = text.rfind('}');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open) {
    throw ParseError("DOT input needs a braced body");
  }
  std::vector<CubicGraph::Pair> pairs;
  int n = 0;
  std::string body(text.substr(open + 1, close - open - 1));
  std::stringstream ss(body);
  std::string stmt;
  while (std::getline(ss, stmt, ';')) {
    if (auto bracket = stmt.find('['); bracket != std::string::npos) stmt.resize(bracket);
    std::istringstream in(stmt);
    std::vector<std::string> tokens;
    for (std::string t; in >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    auto vertex = [&](const std::string& t) {
      try {
        std::size_t used = 0;
        const int v = std::stoi(t, &used);
        if (used != t.size() || v < 0) throw ParseError("");
        n = std::max(n, v + 1);
        return v;
      } catch (const std::exception&) {
        throw ParseError("bad DOT vertex '" + t + "'");
      }
    };
    if (tokens.size() == 1) {
      vertex(tokens[0]);
    } else if (tokens.size() == 3 && tokens[1] == "--") {
      const int a = vertex(tokens[0]);
      const int b = vertex(tokens[2]);
      pairs.emplace_back(a, b);
    } else {
      throw ParseError("unsupported DOT statement '" + stmt + "'");
    }
  }
  return CubicGraph::from_adjacency(n, pairs);
}

CubicGraph from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    std::vector<CubicGraph::Pair> pairs;
    for (const auto& e : j.at("edges")) pairs.emplace_back(e.at("u").get<int>(), e.at("v").get<int>());
    const int n = j.at("n").get<int>();
    return CubicGraph::from_adjacency(n, pairs);
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("bad JSON graph: ") + ex.what());
  }
}

std::vector<CubicGraph> read_graphs(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  const auto rest = text.substr(i);
  if (rest.empty()) throw ParseError("empty input");
  if (rest.front() == '{') return {from_json(rest)};
  if (rest.starts_with("graph") || rest.starts_with("strict")) return {from_dot(rest)};
  std::istringstream lines{std::string(rest)};
  for (std::string line; std::getline(lines, line);) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (std::isdigit(static_cast<unsigned char>(line[first]))) return {from_adjacency_text(rest)};
    break;
  }
  std::istringstream in{std::string(rest)};
  return read_graph6_stream(in);
}

std::vector<CubicGraph> read_graph6_stream(std::istream& in) {
  std::vector<CubicGraph> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    out.push_back(parse_graph6_or_sparse6(line));
  }
  return out;
}

}  // namespace lonely
