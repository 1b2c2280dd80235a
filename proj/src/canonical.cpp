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

#include "lonelyedge/canonical.hpp"

#include <algorithm>
#include <cstdio>

namespace lonely {
namespace {

using Cell = std::vector<Vertex>;
using Partition = std::vector<Cell>;

class Canonicalizer {
 public:
  explicit Canonicalizer(const CubicGraph& g)
      : n_(g.order()), mult_(static_cast<size_t>(n_) * n_, 0) {
    for (const auto& e : g.edges()) {
      ++mult_[e.u * n_ + e.v];
      ++mult_[e.v * n_ + e.u];
    }
  }

  void run() {
    Partition root{Cell(n_)};
    for (Vertex v = 0; v < n_; ++v) root[0][v] = v;
    search(std::move(root));
  }

  const std::vector<std::uint8_t>& best() const { return best_; }
  const std::vector<Vertex>& best_labeling() const { return best_labeling_; }

 private:
  std::uint8_t mult(Vertex a, Vertex b) const { return mult_[a * n_ + b]; }

  // Equitable refinement. Cells are split by the number of edges into each
  // splitter cell; sub-cells are ordered by that count so the result depends
  // only on the isomorphism class of (graph, partition).
  void refine(Partition& cells) const {
    std::vector<int> key(n_);
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t s = 0; s < cells.size(); ++s) {
        const Cell splitter = cells[s];
        Partition next;
        next.reserve(cells.size() + 4);
        for (auto& cell : cells) {
          if (cell.size() == 1) {
            next.push_back(std::move(cell));
            continue;
          }
          for (Vertex w : cell) {
            int k = 0;
            for (Vertex x : splitter) k += mult(w, x);
            key[w] = k;
          }
          std::stable_sort(cell.begin(), cell.end(),
                           [&](Vertex a, Vertex b) { return key[a] < key[b]; });
          size_t start = 0;
          int groups = 0;
          for (size_t i = 1; i <= cell.size(); ++i) {
            if (i == cell.size() || key[cell[i]] != key[cell[start]]) {
              next.emplace_back(cell.begin() + start, cell.begin() + i);
              start = i;
              ++groups;
            }
          }
          if (groups > 1) changed = true;
        }
        cells = std::move(next);
      }
    }
  }

  void search(Partition cells) {
    refine(cells);
    size_t target = cells.size();
    for (size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].size() > 1 &&
          (target == cells.size() || cells[i].size() < cells[target].size())) {
        target = i;
      }
    }
    if (target == cells.size()) {
      leaf(cells);
      return;
    }
    for (Vertex w : cells[target]) {
      Partition child;
      child.reserve(cells.size() + 1);
      for (size_t i = 0; i < cells.size(); ++i) {
        if (i != target) {
          child.push_back(cells[i]);
          continue;
        }
        child.push_back(Cell{w});
        Cell rest;
        for (Vertex x : cells[i]) {
          if (x != w) rest.push_back(x);
        }
        child.push_back(std::move(rest));
      }
      search(std::move(child));
    }
  }

  void leaf(const Partition& cells) {
    std::vector<std::uint8_t> cert;
    cert.reserve(2 + static_cast<size_t>(n_) * (n_ - 1) / 2);
    cert.push_back(static_cast<std::uint8_t>(n_ >> 8));
    cert.push_back(static_cast<std::uint8_t>(n_ & 0xff));
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) cert.push_back(mult(cells[i][0], cells[j][0]));
    }
    if (best_.empty() || cert < best_) {
      best_ = std::move(cert);
      best_labeling_.assign(n_, 0);
      for (int i = 0; i < n_; ++i) best_labeling_[cells[i][0]] = i;
    }
  }

  int n_;
  std::vector<std::uint8_t> mult_;
  std::vector<std::uint8_t> best_;
  std::vector<Vertex> best_labeling_;
};

}  // namespace

std::string CanonicalForm::to_hex() const {
  std::string s;
  s.reserve(bytes.size() * 2);
  char buf[3];
  for (auto b : bytes) {
    std::snprintf(buf, sizeof buf, "%02x", b);
    s += buf;
  }
  return s;
}

CanonicalForm canonical_form(const CubicGraph& g) {
  Canonicalizer c(g);
  c.run();
  return CanonicalForm{c.best()};
}

std::vector<Vertex> canonical_labeling(const CubicGraph& g) {
  Canonicalizer c(g);
  c.run();
  return c.best_labeling();
}

CubicGraph canonical_graph(const CubicGraph& g) {
  const auto pos = canonical_labeling(g);
  std::vector<CubicGraph::Pair> pairs;
  pairs.reserve(g.size());
  for (const auto& e : g.edges()) {
    const Vertex a = pos[e.u], b = pos[e.v];
    pairs.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(pairs.begin(), pairs.end());
  return CubicGraph::from_adjacency(g.order(), pairs);
}

bool is_isomorphic(const CubicGraph& a, const CubicGraph& b) {
  if (a.order() != b.order()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace lonely
