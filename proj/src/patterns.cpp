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

#include "lonelyedge/patterns.hpp"

#include <algorithm>

namespace lonely {

ExtensionPattern::ExtensionPattern(std::vector<int> steps) : steps_(std::move(steps)) {
  for (int s : steps_) {
    if (s < 1 || s > 3) {
      throw PatternError("extension pattern entries must be 1, 2 or 3, got " +
                         std::to_string(s));
    }
  }
}

ExtensionPattern ExtensionPattern::parse(std::string_view digits) {
  std::vector<int> steps;
  for (char c : digits) {
    if (c < '1' || c > '3') {
      throw PatternError("invalid pattern digit '" + std::string(1, c) + "'");
    }
    steps.push_back(c - '0');
  }
  return ExtensionPattern(std::move(steps));
}

std::string ExtensionPattern::to_string() const {
  std::string s;
  for (int x : steps_) s.push_back(static_cast<char>('0' + x));
  return s;
}

ExtensionPattern ExtensionPattern::reversed() const {
  return ExtensionPattern(std::vector<int>(steps_.rbegin(), steps_.rend()));
}

ExtensionPattern ExtensionPattern::relabeled(const std::array<int, 3>& perm) const {
  std::vector<int> out;
  out.reserve(steps_.size());
  for (int x : steps_) out.push_back(perm[x - 1]);
  return ExtensionPattern(std::move(out));
}

std::vector<ExtensionPattern> ExtensionPattern::all_of_length(int m) {
  std::vector<std::vector<int>> acc{{}};
  for (int i = 0; i < m; ++i) {
    std::vector<std::vector<int>> next;
    next.reserve(acc.size() * 3);
    for (const auto& p : acc) {
      for (int s = 1; s <= 3; ++s) {
        next.push_back(p);
        next.back().push_back(s);
      }
    }
    acc = std::move(next);
  }
  std::vector<ExtensionPattern> out;
  out.reserve(acc.size());
  for (auto& p : acc) out.emplace_back(std::move(p));
  return out;
}

namespace {

struct Run {
  int symbol;
  int length;
};

std::vector<Run> runs_of(const std::vector<int>& steps) {
  std::vector<Run> runs;
  for (int s : steps) {
    if (!runs.empty() && runs.back().symbol == s) {
      ++runs.back().length;
    } else {
      runs.push_back({s, 1});
    }
  }
  return runs;
}

}  // namespace

bool u4_pattern_predicate(const ExtensionPattern& p) {
  if (p.size() == 2) return true;
  return p.size() > 2 && runs_of(p.steps()).size() == 1;
}

bool u3_pattern_predicate(const ExtensionPattern& p) {
  if (p.size() < 3) return false;
  const auto runs = runs_of(p.steps());
  if (p.size() == 3 && runs.size() == 3 && runs[0].symbol == runs[2].symbol) {
    return true;
  }
  if (runs.size() == 2) {
    // b c^j or a^i b, with the lone symbol at one end.
    return runs[0].length == 1 || runs[1].length == 1;
  }
  if (runs.size() == 3) {
    return runs[1].length == 1 && runs[0].symbol != runs[2].symbol;
  }
  return false;
}

}  // namespace lonely
