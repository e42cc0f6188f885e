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
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

namespace lapdom {

// Simple undirected graph on nodes 1..n.
//
// Adjacency is a packed upper triangle: the pair of 0-based nodes u < v lives
// at bit v(v-1)/2 + u, which is also the order graph6 uses. Instances are
// immutable once built.
class Graph {
 public:
  // 1-based node pair.
  using Edge = std::pair<int, int>;

  // Duplicates (in either orientation) collapse. Throws InvalidArgument on an
  // out-of-range node or a self-loop, naming the offending pair.
  static Graph from_edge_list(int n, std::span<const Edge> pairs);

  static Graph edgeless(int n);
  static Graph cycle(int n);
  static Graph complete(int n);
  // Clique on nodes 1..clique, nodes clique+1..n isolated.
  static Graph complete_plus_isolated(int clique, int n);
  // Star K_{1,leaves}; node 1 is the centre.
  static Graph star(int leaves);

  // Raw constructor used by the graph6 decoder and the exhaustive generators.
  // `bits` must have exactly word_count(n) words with no bits past the
  // triangle.
  static Graph from_triangle_bits(int n, std::vector<std::uint64_t> bits);
  // Graph on n <= 11 nodes whose triangle is the low n(n-1)/2 bits of `mask`.
  static Graph from_mask(int n, std::uint64_t mask);

  int n() const noexcept { return n_; }
  std::int64_t m() const noexcept { return m_; }

  // 1-based.
  bool has_edge(int i, int j) const;
  int degree(int i) const { return degrees_.at(static_cast<std::size_t>(i - 1)); }
  // Degrees in node order (index 0 is node 1).
  std::span<const int> degrees() const noexcept { return degrees_; }
  // Edges as 1-based pairs (i < j), ordered by j then i.
  std::vector<Edge> edges() const;

  // 0-based adjacency test for hot loops.
  bool adjacent0(int u, int v) const noexcept {
    if (u == v) return false;
    if (u > v) std::swap(u, v);
    const std::uint64_t bit = triangle_index(u, v);
    return (bits_[bit >> 6] >> (bit & 63)) & 1u;
  }

  std::span<const std::uint64_t> triangle_bits() const noexcept { return bits_; }

  static std::uint64_t triangle_size(int n) noexcept {
    return static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1) / 2;
  }
  static std::size_t word_count(int n) noexcept {
    return static_cast<std::size_t>((triangle_size(n) + 63) / 64);
  }
  static std::uint64_t triangle_index(int u, int v) noexcept {
    return static_cast<std::uint64_t>(v) * static_cast<std::uint64_t>(v - 1) / 2 +
           static_cast<std::uint64_t>(u);
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  Graph(int n, std::vector<std::uint64_t> bits);

  int n_ = 0;
  std::int64_t m_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<int> degrees_;
};

Graph complement(const Graph& g);

// Components are relabelled consecutively in list order.
Graph disjoint_union(std::span<const Graph> parts);

// Plain edge-list text: first line "n m", then m lines "i j" (1-based).
// Blank lines and lines starting with '#' are skipped. ParseError offsets are
// 1-based line numbers.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace lapdom
