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

#include "lapdom/graph.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "lapdom/error.hpp"

namespace lapdom {
namespace {

void check_node_count(int n) {
  if (n < 1) throw InvalidArgument("graph needs at least one node, got " + std::to_string(n));
}

void set_bit(std::vector<std::uint64_t>& bits, int u, int v) {
  if (u > v) std::swap(u, v);
  const std::uint64_t b = Graph::triangle_index(u, v);
  bits[b >> 6] |= std::uint64_t{1} << (b & 63);
}

}  // namespace

Graph::Graph(int n, std::vector<std::uint64_t> bits)
    : n_(n), bits_(std::move(bits)), degrees_(static_cast<std::size_t>(n), 0) {
  for (const auto word : bits_) m_ += std::popcount(word);
  for (int v = 1; v < n_; ++v) {
    for (int u = 0; u < v; ++u) {
      if (adjacent0(u, v)) {
        ++degrees_[static_cast<std::size_t>(u)];
        ++degrees_[static_cast<std::size_t>(v)];
      }
    }
  }
}

Graph Graph::from_edge_list(int n, std::span<const Edge> pairs) {
  check_node_count(n);
  std::vector<std::uint64_t> bits(word_count(n), 0);
  for (const auto& [i, j] : pairs) {
    const std::string pair = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    if (i < 1 || i > n || j < 1 || j > n) {
      throw InvalidArgument("edge " + pair + " has a node outside 1.." + std::to_string(n));
    }
    if (i == j) throw InvalidArgument("edge " + pair + " is a self-loop");
    set_bit(bits, i - 1, j - 1);
  }
  return Graph(n, std::move(bits));
}

Graph Graph::edgeless(int n) {
  check_node_count(n);
  return Graph(n, std::vector<std::uint64_t>(word_count(n), 0));
}

Graph Graph::cycle(int n) {
  if (n < 3) throw InvalidArgument("cycle needs n >= 3, got " + std::to_string(n));
  std::vector<std::uint64_t> bits(word_count(n), 0);
  for (int u = 0; u < n; ++u) set_bit(bits, u, (u + 1) % n);
  return Graph(n, std::move(bits));
}

Graph Graph::complete(int n) { return complete_plus_isolated(n, n); }

Graph Graph::complete_plus_isolated(int clique, int n) {
  check_node_count(n);
  if (clique < 0 || clique > n) {
    throw InvalidArgument("clique size " + std::to_string(clique) + " outside 0.." +
                          std::to_string(n));
  }
  std::vector<std::uint64_t> bits(word_count(n), 0);
  for (int v = 1; v < clique; ++v)
    for (int u = 0; u < v; ++u) set_bit(bits, u, v);
  return Graph(n, std::move(bits));
}

Graph Graph::star(int leaves) {
  if (leaves < 0) throw InvalidArgument("star needs a nonnegative leaf count");
  std::vector<std::uint64_t> bits(word_count(leaves + 1), 0);
  for (int v = 1; v <= leaves; ++v) set_bit(bits, 0, v);
  return Graph(leaves + 1, std::move(bits));
}

Graph Graph::from_triangle_bits(int n, std::vector<std::uint64_t> bits) {
  check_node_count(n);
  if (bits.size() != word_count(n)) {
    throw InvalidArgument("triangle bitset has " + std::to_string(bits.size()) +
                          " words, expected " + std::to_string(word_count(n)));
  }
  const std::uint64_t used = triangle_size(n) % 64;
  if (used != 0 && (bits.back() >> used) != 0) {
    throw InvalidArgument("triangle bitset has bits past the last node pair");
  }
  return Graph(n, std::move(bits));
}

Graph Graph::from_mask(int n, std::uint64_t mask) {
  if (n > 11) throw InvalidArgument("from_mask supports n <= 11");
  check_node_count(n);
  const std::uint64_t size = triangle_size(n);
  if (size < 64 && (mask >> size) != 0) throw InvalidArgument("mask has bits past the triangle");
  std::vector<std::uint64_t> bits(word_count(n), 0);
  if (!bits.empty()) bits[0] = mask;
  return Graph(n, std::move(bits));
}

bool Graph::has_edge(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) {
    throw InvalidArgument("node pair (" + std::to_string(i) + "," + std::to_string(j) +
                          ") outside 1.." + std::to_string(n_));
  }
  return adjacent0(i - 1, j - 1);
}

std::vector<Graph::Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int v = 1; v < n_; ++v)
    for (int u = 0; u < v; ++u)
      if (adjacent0(u, v)) out.emplace_back(u + 1, v + 1);
  return out;
}

Graph complement(const Graph& g) {
  const int n = g.n();
  std::vector<std::uint64_t> bits(g.triangle_bits().begin(), g.triangle_bits().end());
  for (auto& w : bits) w = ~w;
  const std::uint64_t used = Graph::triangle_size(n) % 64;
  if (used != 0) bits.back() &= (std::uint64_t{1} << used) - 1;
  return Graph::from_triangle_bits(n, std::move(bits));
}

Graph disjoint_union(std::span<const Graph> parts) {
  if (parts.empty()) throw InvalidArgument("disjoint union of an empty list");
  int n = 0;
  for (const auto& g : parts) n += g.n();
  std::vector<std::uint64_t> bits(Graph::word_count(n), 0);
  int offset = 0;
  for (const auto& g : parts) {
    for (int v = 1; v < g.n(); ++v)
      for (int u = 0; u < v; ++u)
        if (g.adjacent0(u, v)) set_bit(bits, offset + u, offset + v);
    offset += g.n();
  }
  return Graph::from_triangle_bits(n, std::move(bits));
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, out)) {
      ++line_no;
      const auto first = out.find_first_not_of(" \t\r");
      if (first == std::string::npos || out[first] == '#') continue;
      return true;
    }
    return false;
  };
  if (!next_line(line)) throw ParseError("edge list: missing \"n m\" header", line_no + 1);
  long long n = 0;
  long long m = 0;
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> n >> m) || (header >> extra)) {
      throw ParseError("edge list: header must be \"n m\"", line_no);
    }
  }
  if (n < 1 || n > 1'000'000) throw ParseError("edge list: node count out of range", line_no);
  if (m < 0 || m > static_cast<long long>(Graph::triangle_size(static_cast<int>(n)))) {
    throw ParseError("edge list: edge count out of range", line_no);
  }
  std::vector<Graph::Edge> pairs;
  pairs.reserve(static_cast<std::size_t>(m));
  for (long long e = 0; e < m; ++e) {
    if (!next_line(line)) throw ParseError("edge list: expected " + std::to_string(m) +
                                           " edges, found " + std::to_string(e), line_no + 1);
    std::istringstream row(line);
    long long i = 0;
    long long j = 0;
    std::string extra;
    if (!(row >> i >> j) || (row >> extra)) {
      throw ParseError("edge list: edge line must be \"i j\"", line_no);
    }
    if (i < 1 || i > n || j < 1 || j > n || i == j) {
      throw ParseError("edge list: invalid edge (" + std::to_string(i) + "," +
                       std::to_string(j) + ")", line_no);
    }
    pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  if (next_line(line)) throw ParseError("edge list: trailing content after edges", line_no);
  return Graph::from_edge_list(static_cast<int>(n), pairs);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.m() << '\n';
  for (const auto& [i, j] : g.edges()) out << i << ' ' << j << '\n';
}

}  // namespace lapdom
