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

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "lonelyedge/errors.hpp"

namespace lonely {

// A finite sequence over {1, 2, 3} selecting, step by step, which labeled
// vertex of the moving triangle is expanded. The empty pattern is the prism.
class ExtensionPattern {
 public:
  ExtensionPattern() = default;
  // Throws PatternError on entries outside {1, 2, 3}.
  explicit ExtensionPattern(std::vector<int> steps);
  // Digit string such as "3313"; empty string is the empty pattern.
  static ExtensionPattern parse(std::string_view digits);

  const std::vector<int>& steps() const { return steps_; }
  int size() const { return static_cast<int>(steps_.size()); }
  bool empty() const { return steps_.empty(); }
  std::string to_string() const;

  ExtensionPattern reversed() const;
  // Applies the label map 1->perm[0], 2->perm[1], 3->perm[2].
  ExtensionPattern relabeled(const std::array<int, 3>& perm) const;

  // All 3^m patterns of length m in lexicographic order.
  static std::vector<ExtensionPattern> all_of_length(int m);

  friend bool operator==(const ExtensionPattern&, const ExtensionPattern&) = default;

 private:
  std::vector<int> steps_;
};

// Closed-form membership in the class with four lonely edges: every pattern
// of length 2, or a constant pattern of length at least 2.
bool u4_pattern_predicate(const ExtensionPattern& p);

// Closed-form membership in the class with three lonely edges, up to label
// permutation and reversal: (a, b, a) of length 3, or a^i b c^j with
// i + j + 1 >= 3 and the symbols present pairwise distinct.
bool u3_pattern_predicate(const ExtensionPattern& p);

}  // namespace lonely
