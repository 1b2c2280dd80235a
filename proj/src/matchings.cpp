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

#include "lonelyedge/matchings.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "lonelyedge/connectivity.hpp"

namespace lonely {
namespace {

class Bitset {
 public:
  explicit Bitset(int n) : words_((n + 63) / 64, 0) {}
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::vector<std::uint64_t> words_;
};

struct WordsHash {
  size_t operator()(const std::vector<std::uint64_t>& w) const noexcept {
    size_t h = 0x9e3779b97f4a7c15ull;
    for (auto x : w) h = (h ^ x) * 0x100000001b3ull + (h >> 29);
    return h;
  }
};

Count checked_add(Count a, Count b) {
  Count r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("perfect matching count exceeds 64 bits");
  }
  return r;
}

class Enumerator {
 public:
  Enumerator(const CubicGraph& g, std::span<const Vertex> removed,
             const std::function<bool(std::span<const EdgeId>)>& visit)
      : g_(g), covered_(g.order()), visit_(visit) {
    for (Vertex v : removed) covered_.set(v);
    stack_.reserve(g.order() / 2);
  }

  // Returns false if the visitor asked to stop.
  bool run() { return go(0); }

 private:
  bool go(Vertex from) {
    Vertex v = from;
    while (v < g_.order() && covered_.test(v)) ++v;
    if (v == g_.order()) return visit_(stack_);
    covered_.set(v);
    for (EdgeId e : g_.incident(v)) {
      const Vertex w = g_.other(e, v);
      if (covered_.test(w)) continue;
      covered_.set(w);
      stack_.push_back(e);
      const bool keep_going = go(v + 1);
      stack_.pop_back();
      covered_.reset(w);
      if (!keep_going) {
        covered_.reset(v);
        return false;
      }
    }
    covered_.reset(v);
    return true;
  }

  const CubicGraph& g_;
  Bitset covered_;
  std::vector<EdgeId> stack_;
  const std::function<bool(std::span<const EdgeId>)>& visit_;
};

// Cuthill-McKee order of the vertices not in `removed`, started from a
// pseudo-peripheral vertex of each component. Keeps every edge's endpoints
// close in the order, which bounds the number of distinct DP states.
std::vector<Vertex> profile_order(const CubicGraph& g, const std::vector<char>& removed) {
  const int n = g.order();
  std::vector<int> dist(n);
  auto bfs = [&](Vertex s, std::vector<Vertex>* order) {
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<Vertex> q{s};
    dist[s] = 0;
    Vertex far = s;
    while (!q.empty()) {
      const Vertex x = q.front();
      q.pop_front();
      if (order) order->push_back(x);
      if (dist[x] > dist[far]) far = x;
      auto nb = g.neighbors(x);
      std::sort(nb.begin(), nb.end());
      for (Vertex y : nb) {
        if (removed[y] || dist[y] != -1) continue;
        dist[y] = dist[x] + 1;
        q.push_back(y);
      }
    }
    return far;
  };
  std::vector<Vertex> order;
  std::vector<char> placed(n, 0);
  for (Vertex s = 0; s < n; ++s) {
    if (removed[s] || placed[s]) continue;
    Vertex start = bfs(s, nullptr);
    start = bfs(start, nullptr);
    const size_t before = order.size();
    bfs(start, &order);
    for (size_t i = before; i < order.size(); ++i) placed[order[i]] = 1;
  }
  return order;
}

class Counter {
 public:
  Counter(const CubicGraph& g, std::span<const Vertex> removed)
      : g_(g), covered_(g.order()) {
    std::vector<char> gone(g.order(), 0);
    for (Vertex v : removed) gone[v] = 1;
    order_ = profile_order(g, gone);
    pos_.assign(g.order(), -1);
    for (size_t i = 0; i < order_.size(); ++i) pos_[order_[i]] = static_cast<int>(i);
    covered_ = Bitset(static_cast<int>(order_.size()));
  }

  Count run() {
    if (order_.size() % 2 != 0) return 0;
    return go(0);
  }

 private:
  Count go(int i) {
    const int size = static_cast<int>(order_.size());
    while (i < size && covered_.test(i)) ++i;
    if (i == size) return 1;
    if (auto it = memo_.find(covered_.words()); it != memo_.end()) return it->second;
    Count total = 0;
    const Vertex v = order_[i];
    covered_.set(i);
    for (EdgeId e : g_.incident(v)) {
      const int j = pos_[g_.other(e, v)];
      if (j < 0 || covered_.test(j)) continue;
      covered_.set(j);
      total = checked_add(total, go(i + 1));
      covered_.reset(j);
    }
    covered_.reset(i);
    memo_.emplace(covered_.words(), total);
    return total;
  }

  const CubicGraph& g_;
  std::vector<Vertex> order_;
  std::vector<int> pos_;
  Bitset covered_;
  std::unordered_map<std::vector<std::uint64_t>, Count, WordsHash> memo_;
};

constexpr Count kEnumerationLimit = Count{1} << 16;

std::vector<Vertex> closed_neighborhood(const CubicGraph& g, Vertex v) {
  const auto nb = g.neighbors(v);
  return {v, nb[0], nb[1], nb[2]};
}

}  // namespace

void for_each_perfect_matching(const CubicGraph& g,
                               const std::function<void(std::span<const EdgeId>)>& visit,
                               std::span<const Vertex> removed) {
  const std::function<bool(std::span<const EdgeId>)> wrapped =
      [&](std::span<const EdgeId> m) {
        visit(m);
        return true;
      };
  Enumerator(g, removed, wrapped).run();
}

std::vector<PerfectMatching> enumerate_perfect_matchings(const CubicGraph& g) {
  std::vector<PerfectMatching> out;
  for_each_perfect_matching(g, [&](std::span<const EdgeId> m) {
    PerfectMatching pm{{m.begin(), m.end()}};
    std::sort(pm.edges.begin(), pm.edges.end());
    out.push_back(std::move(pm));
  });
  return out;
}

Count count_perfect_matchings(const CubicGraph& g, std::span<const Vertex> removed) {
  return Counter(g, removed).run();
}

Count MatchingReport::min_count() const {
  return per_edge.empty() ? 0 : *std::min_element(per_edge.begin(), per_edge.end());
}

MatchingReport matching_report(const CubicGraph& g, bool strict) {
  MatchingReport r;
  r.n = g.order();
  r.per_edge.assign(g.size(), 0);
  Count seen = 0;
  const std::function<bool(std::span<const EdgeId>)> tally =
      [&](std::span<const EdgeId> m) {
        if (++seen > kEnumerationLimit) return false;
        for (EdgeId e : m) ++r.per_edge[e];
        return true;
      };
  if (Enumerator(g, {}, tally).run()) {
    r.pm_count = seen;
  } else {
    r.pm_count = count_perfect_matchings(g);
    for (EdgeId e = 0; e < g.size(); ++e) {
      const Vertex ends[] = {g.edge(e).u, g.edge(e).v};
      r.per_edge[e] = count_perfect_matchings(g, ends);
    }
  }
  if (strict && r.pm_count == 0) throw NoPerfectMatchingError("graph has no perfect matching");
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (r.per_edge[e] == 1) r.lonely_ids.push_back(e);
  }
  std::sort(r.lonely_ids.begin(), r.lonely_ids.end(),
            [&](EdgeId a, EdgeId b) { return g.ref(a) < g.ref(b); });
  for (EdgeId e : r.lonely_ids) r.lonely.push_back(g.ref(e));
  return r;
}

bool is_matching_double_covered(const CubicGraph& g) {
  if (!is_bridgeless(g)) throw BridgeError("graph has a bridge");
  return matching_report(g).min_count() >= 2;
}

std::pair<Count, Count> count_pm_with_and_without(const CubicGraph& g, EdgeId e) {
  const Vertex ends[] = {g.edge(e).u, g.edge(e).v};
  const Count with = count_perfect_matchings(g, ends);
  return {with, count_perfect_matchings(g) - with};
}

std::vector<VJoin> enumerate_v_joins(const CubicGraph& g, Vertex v) {
  std::vector<VJoin> out;
  if (!g.has_distinct_neighbors(v)) return out;
  const auto removed = closed_neighborhood(g, v);
  for_each_perfect_matching(
      g,
      [&](std::span<const EdgeId> m) {
        VJoin j{v, {m.begin(), m.end()}};
        for (EdgeId e : g.incident(v)) j.edges.push_back(e);
        std::sort(j.edges.begin(), j.edges.end());
        out.push_back(std::move(j));
      },
      removed);
  return out;
}

Count count_v_joins(const CubicGraph& g, Vertex v) {
  if (!g.has_distinct_neighbors(v)) return 0;
  return count_perfect_matchings(g, closed_neighborhood(g, v));
}

bool v_join_contains(const CubicGraph& g, Vertex v, EdgeId e) {
  if (!g.has_distinct_neighbors(v)) return false;
  if (g.touches(e, v)) return count_v_joins(g, v) > 0;
  auto removed = closed_neighborhood(g, v);
  const Vertex a = g.edge(e).u, b = g.edge(e).v;
  if (std::find(removed.begin(), removed.end(), a) != removed.end() ||
      std::find(removed.begin(), removed.end(), b) != removed.end()) {
    return false;
  }
  removed.push_back(a);
  removed.push_back(b);
  return count_perfect_matchings(g, removed) > 0;
}

bool v_join_avoiding(const CubicGraph& g, Vertex v, EdgeId e) {
  if (g.touches(e, v)) {
    throw IncidentError("edge " + g.ref(e).to_string() + " touches vertex " +
                        std::to_string(v));
  }
  return !v_join_contains(g, v, e);
}

int lonely_in_v_joins(const CubicGraph& g, Vertex v, const MatchingReport& report) {
  int p = 0;
  for (EdgeId e : report.lonely_ids) {
    if (!g.touches(e, v) && v_join_contains(g, v, e)) ++p;
  }
  return p;
}

}  // namespace lonely
