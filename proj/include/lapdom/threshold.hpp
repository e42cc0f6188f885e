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

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lapdom/graph.hpp"
#include "lapdom/partitions.hpp"
#include "lapdom/spectra.hpp"

namespace lapdom {

// A threshold graph in canonical form: the strictly decreasing positive
// column counts c_1 > ... > c_f >= 1 of its Ferrers diagram below the
// diagonal, with c_i <= n - i. The part on and above the diagonal is the
// transpose, so m = sum c_i and the conjugate degrees are d*_i = c_i + i for
// i <= f. Distinct column lists are distinct threshold graphs.
class ThresholdGraph {
 public:
  // Throws InvalidArgument unless cols is strictly decreasing, positive, and
  // c_i <= n - i.
  static ThresholdGraph from_below_columns(int n, std::vector<int> cols);
  // Throws InvalidArgument unless is_threshold(d).
  static ThresholdGraph from_degrees(const DegreeSequence& d);
  // Build order: the first node, then one flag per further node (true adds a
  // node adjacent to every earlier node, false an isolated one).
  static ThresholdGraph from_creation_sequence(std::span<const bool> dominating);
  static ThresholdGraph edgeless(int n);

  int n() const noexcept { return n_; }
  std::int64_t m() const noexcept { return m_; }
  int trace() const noexcept { return static_cast<int>(cols_.size()); }
  std::span<const int> below_columns() const noexcept { return cols_; }

  // Node i of realize() has degree degrees().at(i).
  DegreeSequence degrees() const;
  // Equal to the Laplacian spectrum.
  ConjugateSequence conjugate_degrees() const;
  std::int64_t prefix_sum(int k) const { return conjugate_degrees().prefix(k); }

  // "n: c1 c2 ... cf"; the edgeless graph prints as "n:".
  std::string to_string() const;
  static ThresholdGraph parse(std::string_view text);

  friend bool operator==(const ThresholdGraph&, const ThresholdGraph&) = default;

 private:
  ThresholdGraph(int n, std::vector<int> cols);

  int n_ = 1;
  std::int64_t m_ = 0;
  std::vector<int> cols_;
};

// Lexicographic order on the column lists (shorter-is-smaller on a common
// prefix), then on n.
std::strong_ordering compare_columns(const ThresholdGraph& a, const ThresholdGraph& b);

// Node i (1-based) gets the i-th largest degree and is adjacent to the d_i
// highest-ranked other nodes.
Graph realize(const ThresholdGraph& t);

// Exact integer spectrum (the conjugate degrees) as a Spectrum.
Spectrum spectrum_of(const ThresholdGraph& t);

// Threshold graph with the same n and m as the split graph g whose top-k
// Laplacian sum is at least g's. k < f(g): keep the below-diagonal columns;
// k >= f(g): refill the region on/above the diagonal columnwise up to row f(g).
// Throws InvalidArgument if g is not split or k is outside 1..n.
ThresholdGraph split_dominator(const Graph& g, int k);

// Which term attains min{kn, m + k(k+1)/2, 2m}; ties go to the lower case.
enum class ExtremalCase { kColumnFill = 1, kTraceK = 2, kAllEdges = 3 };

struct ExtremalConstruction {
  ThresholdGraph graph;
  ExtremalCase which;
  int h = 0;  // cases 2 and 3 only
  int r = 0;  // cases 2 and 3 only
  std::int64_t prefix_sum = 0;
};

// Threshold graph on (n, m) maximising d*_1 + ... + d*_k.
ExtremalConstruction brouwer_extremal_construction(int n, std::int64_t m, int k);
inline ThresholdGraph brouwer_extremal(int n, std::int64_t m, int k) {
  return brouwer_extremal_construction(n, m, k).graph;
}

// Below-diagonal column i of the result holds sum_j max{0, d*_i(T_j) - i}
// boxes. Dominates the disjoint union's prefix sums at every k.
ThresholdGraph union_merge(std::span<const ThresholdGraph> parts);

ThresholdGraph complement_threshold(const ThresholdGraph& t);

// n >= 8. Threshold graph on n nodes and n edges whose prefix sums dominate
// the cycle C_n. With h = floor(sqrt(2n)), the trace is f = h when
// 2n >= h^2 + h and h - 1 otherwise; column i <= f gets f + 1 - i boxes plus
// one of the n - f(f+1)/2 leftover boxes, handed out left to right.
ThresholdGraph cycle_dominator(int n);

// K_q with the other n - q nodes pendant to one clique node; 2 <= q <= n.
ThresholdGraph pineapple(int n, int q);

// Clique size floor((2n+1)/3) + 1, capped at n.
int extremal_clique_size(int n);
// K_c plus n - c isolated nodes, c = extremal_clique_size(n).
ThresholdGraph clique_plus_isolated_threshold(int n);

}  // namespace lapdom
