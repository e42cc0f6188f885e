// Copyright 2026 The lapdom Authors
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

#include <cstdint>
#include <span>
#include <vector>

#include "lapdom/graph.hpp"

namespace lapdom {

// Nonincreasing degrees d_1 >= ... >= d_n, each in 0..n-1. Always length n.
class DegreeSequence {
 public:
  explicit DegreeSequence(std::vector<int> values);
  static DegreeSequence of(const Graph& g);

  int size() const noexcept { return static_cast<int>(values_.size()); }
  std::span<const int> values() const noexcept { return values_; }
  // 1-based, matching d_i.
  int at(int i) const { return values_.at(static_cast<std::size_t>(i - 1)); }
  std::int64_t sum() const noexcept;

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<int> values_;
};

// Conjugate degrees d*_1 >= ... >= d*_n, each in 0..n. Always length n.
class ConjugateSequence {
 public:
  explicit ConjugateSequence(std::vector<int> values);

  int size() const noexcept { return static_cast<int>(values_.size()); }
  std::span<const int> values() const noexcept { return values_; }
  int at(int i) const { return values_.at(static_cast<std::size_t>(i - 1)); }
  std::int64_t sum() const noexcept;
  // prefix(k) = d*_1 + ... + d*_k, 0 <= k <= n.
  std::int64_t prefix(int k) const;

  friend bool operator==(const ConjugateSequence&, const ConjugateSequence&) = default;

 private:
  std::vector<int> values_;
};

// d*_i = |{j : d_j >= i}|.
ConjugateSequence conjugate(const DegreeSequence& d);
// Inverse direction; throws InvalidArgument when a part would exceed n-1
// (only possible if d*_n != 0).
DegreeSequence conjugate(const ConjugateSequence& c);

// f = max{i : d_i >= i}, 0 for the all-zero sequence.
int trace(const DegreeSequence& d);

// Boxes on/above the diagonal in rows 1..f equal boxes below the diagonal in
// columns 1..f.
bool is_split(const DegreeSequence& d);

// d*_i = d_i + 1 for i = 1..f.
bool is_threshold(const DegreeSequence& d);

// c_i = d*_i - i for i = 1..f; may contain zeros for split sequences.
std::vector<int> below_columns(const DegreeSequence& d);

}  // namespace lapdom
