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

#include "lapdom/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "lapdom/error.hpp"

namespace lapdom {
namespace {

void check_nonincreasing(std::span<const int> v, int max_part, const char* what) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0 || v[i] > max_part) {
      throw InvalidArgument(std::string(what) + ": entry " + std::to_string(i + 1) + " = " +
                            std::to_string(v[i]) + " outside 0.." + std::to_string(max_part));
    }
    if (i > 0 && v[i] > v[i - 1]) {
      throw InvalidArgument(std::string(what) + " must be nonincreasing (entry " +
                            std::to_string(i + 1) + ")");
    }
  }
}

// Conjugate of a nonincreasing sequence, padded to `length`.
std::vector<int> transpose(std::span<const int> parts, std::size_t length) {
  std::vector<int> out(length, 0);
  for (const int p : parts)
    for (int i = 0; i < p && static_cast<std::size_t>(i) < length; ++i) ++out[static_cast<std::size_t>(i)];
  return out;
}

}  // namespace

DegreeSequence::DegreeSequence(std::vector<int> values) : values_(std::move(values)) {
  check_nonincreasing(values_, std::max(0, size() - 1), "degree sequence");
}

DegreeSequence DegreeSequence::of(const Graph& g) {
  std::vector<int> d(g.degrees().begin(), g.degrees().end());
  std::sort(d.begin(), d.end(), std::greater<>());
  return DegreeSequence(std::move(d));
}

std::int64_t DegreeSequence::sum() const noexcept {
  return std::accumulate(values_.begin(), values_.end(), std::int64_t{0});
}

ConjugateSequence::ConjugateSequence(std::vector<int> values) : values_(std::move(values)) {
  check_nonincreasing(values_, size(), "conjugate sequence");
}

std::int64_t ConjugateSequence::sum() const noexcept {
  return std::accumulate(values_.begin(), values_.end(), std::int64_t{0});
}

std::int64_t ConjugateSequence::prefix(int k) const {
  if (k < 0 || k > size()) throw InvalidArgument("prefix length out of range");
  return std::accumulate(values_.begin(), values_.begin() + k, std::int64_t{0});
}

ConjugateSequence conjugate(const DegreeSequence& d) {
  return ConjugateSequence(transpose(d.values(), static_cast<std::size_t>(d.size())));
}

DegreeSequence conjugate(const ConjugateSequence& c) {
  return DegreeSequence(transpose(c.values(), static_cast<std::size_t>(c.size())));
}

int trace(const DegreeSequence& d) {
  int f = 0;
  while (f < d.size() && d.at(f + 1) >= f + 1) ++f;
  return f;
}

bool is_split(const DegreeSequence& d) {
  const int f = trace(d);
  const auto c = conjugate(d);
  std::int64_t on_or_above = 0;
  std::int64_t below = 0;
  for (int i = 1; i <= f; ++i) {
    on_or_above += d.at(i) - i + 1;
    below += c.at(i) - i;
  }
  return on_or_above == below;
}

bool is_threshold(const DegreeSequence& d) {
  const int f = trace(d);
  const auto c = conjugate(d);
  for (int i = 1; i <= f; ++i)
    if (c.at(i) != d.at(i) + 1) return false;
  return true;
}

std::vector<int> below_columns(const DegreeSequence& d) {
  const int f = trace(d);
  const auto c = conjugate(d);
  std::vector<int> cols;
  cols.reserve(static_cast<std::size_t>(f));
  for (int i = 1; i <= f; ++i) cols.push_back(c.at(i) - i);
  return cols;
}

}  // namespace lapdom
