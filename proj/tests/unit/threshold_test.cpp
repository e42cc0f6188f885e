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

#include <doctest.h>

#include <cmath>
#include <memory>

#include "eigen_oracle.hpp"
#include "lapdom/error.hpp"
#include "lapdom/partitions.hpp"
#include "lapdom/threshold.hpp"

using lapdom::Graph;
using lapdom::ThresholdGraph;

namespace {

std::vector<int> vec(std::span<const int> s) { return {s.begin(), s.end()}; }

std::vector<int> conj(const ThresholdGraph& t) {
  const auto c = t.conjugate_degrees();
  return vec(c.values());
}

std::vector<int> degs(const ThresholdGraph& t) {
  const auto d = t.degrees();
  return vec(d.values());
}

std::vector<std::int64_t> int_prefix(const std::vector<int>& v) {
  std::vector<std::int64_t> out;
  std::int64_t acc = 0;
  for (const int x : v) out.push_back(acc += x);
  return out;
}

std::vector<ThresholdGraph> all_threshold(int n) {
  std::vector<ThresholdGraph> out;
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> cols;
    for (int p = n - 1; p >= 1; --p)
      if ((mask >> (p - 1)) & 1u) cols.push_back(p);
    // A subset of {1..n-1} is a valid column list once shifted: c_i <= n - i
    // holds for distinct decreasing parts below n.
    out.push_back(ThresholdGraph::from_below_columns(n, cols));
  }
  return out;
}

const ThresholdGraph kC8Dominator = ThresholdGraph::from_below_columns(8, {4, 3, 1});

}  // namespace

TEST_CASE("column-list validation") {
  CHECK_THROWS_AS(ThresholdGraph::from_below_columns(8, {3, 4}), lapdom::InvalidArgument);
  CHECK_THROWS_AS(ThresholdGraph::from_below_columns(8, {3, 3}), lapdom::InvalidArgument);
  CHECK_THROWS_AS(ThresholdGraph::from_below_columns(8, {8}), lapdom::InvalidArgument);
  CHECK_THROWS_AS(ThresholdGraph::from_below_columns(8, {4, 0}), lapdom::InvalidArgument);
  CHECK_THROWS_AS(ThresholdGraph::from_below_columns(4, {3, 3, 1}), lapdom::InvalidArgument);
  CHECK(lapdom::realize(ThresholdGraph::from_below_columns(4, {3, 2, 1})) == Graph::complete(4));
  CHECK_THROWS_AS(ThresholdGraph::from_below_columns(0, {}), lapdom::InvalidArgument);
  CHECK_NOTHROW(ThresholdGraph::from_below_columns(4, {3, 2}));
  CHECK_THROWS_AS(ThresholdGraph::from_degrees(lapdom::DegreeSequence({2, 2, 1, 1})),
                  lapdom::InvalidArgument);
}

TEST_CASE("C8 dominator 8: 4 3 1") {
  CHECK(kC8Dominator.m() == 8);
  CHECK(kC8Dominator.trace() == 3);
  CHECK(degs(kC8Dominator) == std::vector<int>{4, 4, 3, 3, 2, 0, 0, 0});
  CHECK(conj(kC8Dominator) == std::vector<int>{5, 5, 4, 2, 0, 0, 0, 0});
  CHECK(int_prefix(conj(kC8Dominator)) == std::vector<std::int64_t>{5, 10, 14, 16, 16, 16, 16, 16});
  CHECK(kC8Dominator.prefix_sum(3) == 14);
  const auto s = lapdom::spectrum_of(kC8Dominator);
  CHECK(s.at(1) == 5.0);
  CHECK(s.at(4) == 2.0);
}

TEST_CASE("realize") {
  const auto g = lapdom::realize(ThresholdGraph::from_below_columns(7, {5, 1}));
  CHECK(oracle::sorted_degrees(g) == std::vector<int>{5, 2, 2, 1, 1, 1, 0});
  CHECK(lapdom::realize(ThresholdGraph::from_below_columns(5, {4, 3, 2, 1})) == Graph::complete(5));
  CHECK(lapdom::realize(ThresholdGraph::edgeless(4)) == Graph::edgeless(4));
}

TEST_CASE("every threshold graph up to 10 nodes: structure and Merris identity") {
  for (int n = 1; n <= 10; ++n) {
    const auto all = all_threshold(n);
    CHECK(all.size() == (std::size_t{1} << (n - 1)));
    for (const auto& t : all) {
      CAPTURE(t.to_string());
      const auto g = lapdom::realize(t);
      REQUIRE(oracle::brute_force_threshold(g));
      REQUIRE(lapdom::is_threshold(lapdom::DegreeSequence::of(g)));
      REQUIRE(g.m() == t.m());
      REQUIRE(conj(t) == oracle::threshold_conjugate(n, vec(t.below_columns())));
      REQUIRE(ThresholdGraph::from_degrees(lapdom::DegreeSequence::of(g)) == t);
      const auto numeric = lapdom::eigenvalues(g);
      const auto eigen = oracle::eigen_laplacian_spectrum(g);
      const auto exact = conj(t);
      for (int i = 1; i <= n; ++i) {
        REQUIRE(std::abs(numeric.at(i) - exact[i - 1]) < 1e-8);
        REQUIRE(std::abs(eigen[i - 1] - exact[i - 1]) < 1e-8);
      }
    }
  }
}

TEST_CASE("creation sequences") {
  const std::vector<bool> dom{true, true, false, true};
  std::unique_ptr<bool[]> flags(new bool[dom.size()]);
  std::copy(dom.begin(), dom.end(), flags.get());
  const auto t = ThresholdGraph::from_creation_sequence({flags.get(), dom.size()});
  // Nodes a, b(dom), c(dom), d(iso), e(dom): degrees a3 b3 c3 d1 e4.
  CHECK(degs(t) == std::vector<int>{4, 3, 3, 3, 1});
  CHECK(ThresholdGraph::from_creation_sequence({}).n() == 1);
}

TEST_CASE("text form") {
  CHECK(kC8Dominator.to_string() == "8: 4 3 1");
  CHECK(ThresholdGraph::edgeless(5).to_string() == "5:");
  CHECK(ThresholdGraph::parse("8: 4 3 1") == kC8Dominator);
  CHECK(ThresholdGraph::parse("  8 :4   3 1 ") == kC8Dominator);
  CHECK(ThresholdGraph::parse("5:") == ThresholdGraph::edgeless(5));
  CHECK_THROWS_AS(ThresholdGraph::parse("8 4 3 1"), lapdom::ParseError);
  CHECK_THROWS_AS(ThresholdGraph::parse("8: 4 x 1"), lapdom::ParseError);
  CHECK_THROWS_AS(ThresholdGraph::parse("8: 1 3"), lapdom::InvalidArgument);
  CHECK(lapdom::compare_columns(ThresholdGraph::parse("4: 2 1"), ThresholdGraph::parse("4: 3")) < 0);
}

TEST_CASE("split dominator on the six-node split example") {
  const std::vector<Graph::Edge> edges{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {1, 6}, {2, 5}};
  const auto g = Graph::from_edge_list(6, edges);
  REQUIRE(oracle::sorted_degrees(g) == std::vector<int>{4, 4, 3, 2, 2, 1});
  const auto t2 = lapdom::split_dominator(g, 2);
  CHECK(degs(t2) == std::vector<int>{5, 4, 2, 2, 2, 1});
  CHECK(t2.prefix_sum(2) == 11);
  const auto t3 = lapdom::split_dominator(g, 3);
  CHECK(vec(t3.below_columns()) == std::vector<int>{4, 3, 1});
  CHECK(conj(t3) == std::vector<int>{5, 5, 4, 2, 0, 0});
  CHECK(t3.prefix_sum(3) == 14);

  CHECK_THROWS_AS(lapdom::split_dominator(Graph::cycle(5), 2), lapdom::InvalidArgument);
  CHECK_THROWS_AS(lapdom::split_dominator(g, 0), lapdom::InvalidArgument);
  CHECK_THROWS_AS(lapdom::split_dominator(g, 7), lapdom::InvalidArgument);
}

TEST_CASE("split dominator dominates every split graph up to 6 nodes") {
  for (int n = 1; n <= 6; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << Graph::triangle_size(n)); ++mask) {
      const auto g = Graph::from_mask(n, mask);
      if (!oracle::brute_force_split(g)) continue;
      const auto lambda = oracle::prefix(oracle::eigen_laplacian_spectrum(g));
      const int f = lapdom::trace(lapdom::DegreeSequence::of(g));
      for (int k = 1; k <= n; ++k) {
        const auto t = lapdom::split_dominator(g, k);
        REQUIRE(t.n() == n);
        REQUIRE(t.m() == g.m());
        REQUIRE(static_cast<double>(t.prefix_sum(k)) >= lambda[k - 1] - 1e-7);
        if (k == f) REQUIRE(t.prefix_sum(k) == g.m() + f * (f + 1) / 2);
      }
      const auto d = lapdom::DegreeSequence::of(g);
      if (lapdom::is_threshold(d)) {
        const auto self = ThresholdGraph::from_degrees(d);
        for (int k = 1; k < f; ++k) REQUIRE(lapdom::split_dominator(g, k) == self);
      }
    }
  }
}

TEST_CASE("brouwer_extremal worked example (8, 15)") {
  using lapdom::ExtremalCase;
  const ExtremalCase expected[] = {ExtremalCase::kColumnFill, ExtremalCase::kColumnFill,
                                   ExtremalCase::kTraceK,     ExtremalCase::kTraceK,
                                   ExtremalCase::kTraceK,     ExtremalCase::kAllEdges,
                                   ExtremalCase::kAllEdges,   ExtremalCase::kAllEdges};
  for (int k = 1; k <= 8; ++k) {
    const auto c = lapdom::brouwer_extremal_construction(8, 15, k);
    CHECK(c.which == expected[k - 1]);
    CHECK(c.prefix_sum == std::min({8 * k, 15 + k * (k + 1) / 2, 30}));
  }
  CHECK(conj(lapdom::brouwer_extremal(8, 15, 2)) == std::vector<int>{8, 8, 5, 3, 2, 2, 2, 0});
  const auto k4 = lapdom::brouwer_extremal_construction(8, 15, 4);
  CHECK(k4.h == 6);
  CHECK(k4.r == 1);
  const auto c4 = conj(k4.graph);
  CHECK(std::vector<int>(c4.begin(), c4.begin() + 4) == std::vector<int>{7, 6, 6, 6});
  const auto k7 = lapdom::brouwer_extremal_construction(8, 15, 7);
  CHECK(k7.h == 5);
  CHECK(k7.r == 0);
  CHECK(conj(k7.graph) == std::vector<int>{6, 6, 6, 6, 6, 0, 0, 0});

  CHECK_THROWS_AS(lapdom::brouwer_extremal(4, 7, 1), lapdom::InvalidArgument);
  CHECK_THROWS_AS(lapdom::brouwer_extremal(4, 3, 5), lapdom::InvalidArgument);
  CHECK(lapdom::brouwer_extremal(5, 0, 3) == ThresholdGraph::edgeless(5));
}

TEST_CASE("brouwer_extremal attains the effective bound for all n <= 12") {
  for (int n = 1; n <= 12; ++n) {
    const std::int64_t top = static_cast<std::int64_t>(n) * (n - 1) / 2;
    for (std::int64_t m = 0; m <= top; ++m) {
      for (int k = 1; k <= n; ++k) {
        const auto c = lapdom::brouwer_extremal_construction(n, m, k);
        const std::int64_t target =
            std::min({static_cast<std::int64_t>(k) * n, m + k * (k + 1) / 2, 2 * m});
        REQUIRE(c.graph.n() == n);
        REQUIRE(c.graph.m() == m);
        REQUIRE(c.graph.prefix_sum(k) == target);
        REQUIRE(c.prefix_sum == target);
      }
    }
  }
}

TEST_CASE("union merge") {
  const std::vector<ThresholdGraph> parts{ThresholdGraph::from_below_columns(3, {2, 1}),
                                          ThresholdGraph::from_below_columns(4, {3})};
  const auto u = lapdom::union_merge(parts);
  CHECK(vec(u.below_columns()) == std::vector<int>{5, 1});
  CHECK(conj(u) == std::vector<int>{6, 3, 1, 1, 1, 0, 0});
  CHECK(int_prefix(conj(u)) == std::vector<std::int64_t>{6, 9, 10, 11, 12, 12, 12});

  const std::vector<ThresholdGraph> single{kC8Dominator};
  CHECK(lapdom::union_merge(single) == kC8Dominator);
  const std::vector<ThresholdGraph> dots(4, ThresholdGraph::edgeless(1));
  CHECK(lapdom::union_merge(dots) == ThresholdGraph::edgeless(4));
  CHECK_THROWS_AS(lapdom::union_merge({}), lapdom::InvalidArgument);
}

TEST_CASE("union merge dominates random disjoint unions") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const int len = 1 + static_cast<int>(rng() % 5);
    std::vector<ThresholdGraph> parts;
    std::vector<int> merged_spectrum;
    for (int j = 0; j < len; ++j) {
      const int n = 1 + static_cast<int>(rng() % 10);
      const auto all = all_threshold(n);
      parts.push_back(all[rng() % all.size()]);
      const auto c = conj(parts.back());
      merged_spectrum.insert(merged_spectrum.end(), c.begin(), c.end());
    }
    std::sort(merged_spectrum.begin(), merged_spectrum.end(), std::greater<>());
    const auto u = lapdom::union_merge(parts);
    const auto up = int_prefix(conj(u));
    const auto gp = int_prefix(merged_spectrum);
    REQUIRE(up.size() == gp.size());
    for (std::size_t k = 0; k < up.size(); ++k) REQUIRE(up[k] >= gp[k]);
  }
}

TEST_CASE("complement relation on every threshold graph up to 10 nodes") {
  const auto k6 = ThresholdGraph::from_below_columns(8, {5, 4, 3, 2, 1});
  const auto k6c = lapdom::complement_threshold(k6);
  CHECK(conj(k6c) == std::vector<int>{8, 8, 2, 2, 2, 2, 2, 0});
  CHECK(k6c.m() == 13);
  CHECK(lapdom::complement_threshold(ThresholdGraph::from_below_columns(5, {4, 3, 2, 1})) ==
        ThresholdGraph::edgeless(5));
  for (int n = 1; n <= 10; ++n) {
    for (const auto& t : all_threshold(n)) {
      const auto c = lapdom::complement_threshold(t);
      REQUIRE(c.m() == static_cast<std::int64_t>(n) * (n - 1) / 2 - t.m());
      REQUIRE(lapdom::realize(c).m() == lapdom::complement(lapdom::realize(t)).m());
      REQUIRE(lapdom::complement_threshold(c) == t);
      const auto a = conj(t), b = conj(c);
      for (int i = 1; i <= n - 1; ++i) REQUIRE(b[i - 1] == n - a[n - i - 1]);
      REQUIRE(b[n - 1] == 0);
    }
  }
}

TEST_CASE("cycle dominator") {
  CHECK(lapdom::cycle_dominator(8) == kC8Dominator);
  CHECK(vec(lapdom::cycle_dominator(9).below_columns()) == std::vector<int>{4, 3, 2});
  CHECK(conj(lapdom::cycle_dominator(9)) == std::vector<int>{5, 5, 5, 3, 0, 0, 0, 0, 0});
  CHECK_THROWS_AS(lapdom::cycle_dominator(7), lapdom::InvalidArgument);
  for (int n = 8; n <= 512; ++n) {
    CAPTURE(n);
    const auto t = lapdom::cycle_dominator(n);
    REQUIRE(t.n() == n);
    REQUIRE(t.m() == n);
    const auto c = conj(t);
    const int h = static_cast<int>(std::floor(std::sqrt(2.0 * n)));
    for (int i = 1; i <= t.trace(); ++i) REQUIRE(c[i - 1] >= h);
    const auto tp = int_prefix(c);
    const auto cp = oracle::prefix(oracle::cycle_spectrum(n));
    for (int k = 0; k < n; ++k) REQUIRE(static_cast<double>(tp[k]) >= cp[k] - 1e-7);
  }
}

TEST_CASE("pineapple and clique-plus-isolated") {
  CHECK(degs(lapdom::pineapple(8, 6)) == std::vector<int>{7, 5, 5, 5, 5, 5, 1, 1});
  CHECK(lapdom::pineapple(8, 6).m() == 17);
  for (int n = 2; n <= 9; ++n) {
    CHECK(lapdom::realize(lapdom::pineapple(n, n)) == Graph::complete(n));
  }
  const auto pg = lapdom::realize(lapdom::pineapple(9, 5));
  CHECK(oracle::sorted_degrees(pg) == std::vector<int>{8, 4, 4, 4, 4, 1, 1, 1, 1});
  CHECK_THROWS_AS(lapdom::pineapple(5, 1), lapdom::InvalidArgument);
  CHECK_THROWS_AS(lapdom::pineapple(5, 6), lapdom::InvalidArgument);

  const auto k7 = lapdom::clique_plus_isolated_threshold(9);
  CHECK(lapdom::realize(k7) == Graph::complete_plus_isolated(7, 9));
  const auto s = lapdom::spectrum_of(k7);
  double le = 0;
  for (const double v : s.values()) le += std::abs(v - 14.0 / 3.0);
  CHECK(le == doctest::Approx(28.0));
  CHECK(lapdom::extremal_clique_size(12) == 9);
  CHECK(lapdom::extremal_clique_size(1) == 1);
}
