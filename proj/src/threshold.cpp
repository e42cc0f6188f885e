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

#include "lapdom/threshold.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <memory>
#include <sstream>

#include "lapdom/error.hpp"

namespace lapdom {
namespace {

std::string columns_text(int n, std::span<const int> cols) {
  std::string s = "(n=" + std::to_string(n) + "; ";
  for (std::size_t i = 0; i < cols.size(); ++i) s += (i ? " " : "") + std::to_string(cols[i]);
  return s + ")";
}

void drop_trailing_zeros(std::vector<int>& cols) {
  while (!cols.empty() && cols.back() == 0) cols.pop_back();
}

int isqrt(std::int64_t x) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return static_cast<int>(r);
}

}  // namespace

ThresholdGraph::ThresholdGraph(int n, std::vector<int> cols) : n_(n), cols_(std::move(cols)) {
  for (const int c : cols_) m_ += c;
}

ThresholdGraph ThresholdGraph::from_below_columns(int n, std::vector<int> cols) {
  if (n < 1) throw InvalidArgument("threshold graph needs n >= 1");
  for (std::size_t i = 0; i < cols.size(); ++i) {
    const int index = static_cast<int>(i) + 1;
    if (cols[i] < 1) {
      throw InvalidArgument("below-diagonal columns must be positive " + columns_text(n, cols));
    }
    if (i > 0 && cols[i] >= cols[i - 1]) {
      throw InvalidArgument("below-diagonal columns must be strictly decreasing " +
                            columns_text(n, cols));
    }
    if (cols[i] > n - index) {
      throw InvalidArgument("column " + std::to_string(index) + " exceeds n - " +
                            std::to_string(index) + " " + columns_text(n, cols));
    }
  }
  return ThresholdGraph(n, std::move(cols));
}

ThresholdGraph ThresholdGraph::from_degrees(const DegreeSequence& d) {
  if (!is_threshold(d)) throw InvalidArgument("degree sequence is not a threshold sequence");
  return from_below_columns(d.size(), lapdom::below_columns(d));
}

ThresholdGraph ThresholdGraph::from_creation_sequence(std::span<const bool> dominating) {
  const auto n = dominating.size() + 1;
  std::vector<int> deg(n, 0);
  int later = 0;
  for (std::size_t t = n; t-- > 0;) {
    const bool dom = t > 0 && dominating[t - 1];
    deg[t] = (dom ? static_cast<int>(t) : 0) + later;
    if (dom) ++later;
  }
  std::sort(deg.begin(), deg.end(), std::greater<>());
  return from_degrees(DegreeSequence(std::move(deg)));
}

ThresholdGraph ThresholdGraph::edgeless(int n) { return from_below_columns(n, {}); }

DegreeSequence ThresholdGraph::degrees() const {
  const int f = trace();
  std::vector<int> d(static_cast<std::size_t>(n_), 0);
  for (int i = 1; i <= f; ++i) d[static_cast<std::size_t>(i - 1)] = cols_[static_cast<std::size_t>(i - 1)] + i - 1;
  for (int i = f + 1; i <= n_; ++i) {
    int count = 0;
    for (int c = 1; c <= f; ++c)
      if (cols_[static_cast<std::size_t>(c - 1)] + c >= i) ++count;
    d[static_cast<std::size_t>(i - 1)] = count;
  }
  return DegreeSequence(std::move(d));
}

ConjugateSequence ThresholdGraph::conjugate_degrees() const { return conjugate(degrees()); }

std::string ThresholdGraph::to_string() const {
  std::string s = std::to_string(n_) + ":";
  for (const int c : cols_) s += " " + std::to_string(c);
  return s;
}

ThresholdGraph ThresholdGraph::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("threshold graph: expected \"n: c1 c2 ...\"", 0);
  }
  auto parse_int = [&](std::string_view token, std::size_t offset) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError("threshold graph: bad integer \"" + std::string(token) + "\"", offset);
    }
    return value;
  };
  auto tokens = [](std::string_view s, std::size_t base) {
    std::vector<std::pair<std::string_view, std::size_t>> out;
    std::size_t i = 0;
    while (i < s.size()) {
      while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r' || s[i] == '\n')) ++i;
      const std::size_t start = i;
      while (i < s.size() && !(s[i] == ' ' || s[i] == '\t' || s[i] == '\r' || s[i] == '\n')) ++i;
      if (i > start) out.emplace_back(s.substr(start, i - start), base + start);
    }
    return out;
  };
  const auto head = tokens(text.substr(0, colon), 0);
  if (head.size() != 1) throw ParseError("threshold graph: expected a single node count", 0);
  const int n = parse_int(head[0].first, head[0].second);
  std::vector<int> cols;
  for (const auto& [tok, offset] : tokens(text.substr(colon + 1), colon + 1)) {
    cols.push_back(parse_int(tok, offset));
  }
  return from_below_columns(n, std::move(cols));
}

std::strong_ordering compare_columns(const ThresholdGraph& a, const ThresholdGraph& b) {
  const auto ca = a.below_columns();
  const auto cb = b.below_columns();
  if (auto c = std::lexicographical_compare_three_way(ca.begin(), ca.end(), cb.begin(), cb.end());
      c != 0) {
    return c;
  }
  return a.n() <=> b.n();
}

Graph realize(const ThresholdGraph& t) {
  const auto d = t.degrees();
  const int n = t.n();
  std::vector<std::uint64_t> bits(Graph::word_count(n), 0);
  // For i < j (1-based): j is among the first d_i nodes other than i.
  for (int j = 2; j <= n; ++j) {
    for (int i = 1; i < j; ++i) {
      if (j <= d.at(i) + 1) {
        const std::uint64_t b = Graph::triangle_index(i - 1, j - 1);
        bits[b >> 6] |= std::uint64_t{1} << (b & 63);
      }
    }
  }
  auto g = Graph::from_triangle_bits(n, std::move(bits));
  for (int i = 1; i <= n; ++i) {
    if (g.degree(i) != d.at(i)) {
      throw Error("realize: node " + std::to_string(i) + " got degree " +
                  std::to_string(g.degree(i)) + ", expected " + std::to_string(d.at(i)) + " for " +
                  t.to_string());
    }
  }
  return g;
}

Spectrum spectrum_of(const ThresholdGraph& t) {
  const auto c = t.conjugate_degrees();
  return Spectrum(std::vector<double>(c.values().begin(), c.values().end()), t.m());
}

ThresholdGraph split_dominator(const Graph& g, int k) {
  const int n = g.n();
  if (k < 1 || k > n) {
    throw InvalidArgument("split_dominator: k=" + std::to_string(k) + " outside 1.." +
                          std::to_string(n));
  }
  const auto d = DegreeSequence::of(g);
  if (!is_split(d)) throw InvalidArgument("split_dominator: input graph is not split");
  const int f = trace(d);
  if (k < f) {
    auto cols = below_columns(d);
    drop_trailing_zeros(cols);
    return ThresholdGraph::from_below_columns(n, std::move(cols));
  }
  // Columnwise fill of the on/above-diagonal region, rows 1..f, columns
  // 1..n-1. Row lengths become the below-diagonal column counts.
  std::vector<int> rows(static_cast<std::size_t>(f), 0);
  std::int64_t remaining = g.m();
  for (int c = 1; c < n && remaining > 0; ++c) {
    const int take = static_cast<int>(std::min<std::int64_t>(std::min(c, f), remaining));
    for (int r = 0; r < take; ++r) ++rows[static_cast<std::size_t>(r)];
    remaining -= take;
  }
  if (remaining != 0) throw Error("split_dominator: region overflow for a split graph");
  drop_trailing_zeros(rows);
  return ThresholdGraph::from_below_columns(n, std::move(rows));
}

ExtremalConstruction brouwer_extremal_construction(int n, std::int64_t m, int k) {
  if (n < 1) throw InvalidArgument("brouwer_extremal: n must be >= 1");
  if (m < 0 || m > static_cast<std::int64_t>(Graph::triangle_size(n))) {
    throw InvalidArgument("brouwer_extremal: m=" + std::to_string(m) + " infeasible for n=" +
                          std::to_string(n));
  }
  if (k < 1 || k > n) {
    throw InvalidArgument("brouwer_extremal: k=" + std::to_string(k) + " outside 1.." +
                          std::to_string(n));
  }
  const std::int64_t kn = static_cast<std::int64_t>(k) * n;
  const std::int64_t tri = static_cast<std::int64_t>(k) * (k + 1) / 2;
  const std::int64_t by_trace = m + tri;
  const std::int64_t all_edges = 2 * m;

  if (m == 0) {
    return {ThresholdGraph::edgeless(n), ExtremalCase::kAllEdges, 0, 0, 0};
  }

  std::vector<int> cols;
  ExtremalConstruction out{ThresholdGraph::edgeless(n), ExtremalCase::kColumnFill, 0, 0, 0};
  if (kn <= by_trace && kn <= all_edges) {
    std::int64_t remaining = m;
    for (int i = 1; i < n && remaining > 0; ++i) {
      const int take = static_cast<int>(std::min<std::int64_t>(n - i, remaining));
      cols.push_back(take);
      remaining -= take;
    }
    out.which = ExtremalCase::kColumnFill;
  } else if (by_trace <= all_edges) {
    const auto h = static_cast<int>((2 * m + 2 * tri) / (2 * static_cast<std::int64_t>(k)));
    const auto r = static_cast<int>(by_trace - static_cast<std::int64_t>(k) * h);
    for (int i = 1; i <= k; ++i) cols.push_back((i <= r ? h + 1 : h) - i);
    out.which = ExtremalCase::kTraceK;
    out.h = h;
    out.r = r;
  } else {
    int h = 0;
    while (h < n && static_cast<std::int64_t>(h + 1) * (h + 2) <= 2 * m) ++h;
    const auto r = static_cast<int>(m - static_cast<std::int64_t>(h) * (h + 1) / 2);
    for (int i = 1; i <= h; ++i) cols.push_back((i <= r ? h + 2 : h + 1) - i);
    out.which = ExtremalCase::kAllEdges;
    out.h = h;
    out.r = r;
  }
  out.graph = ThresholdGraph::from_below_columns(n, std::move(cols));
  out.prefix_sum = out.graph.prefix_sum(k);
  return out;
}

ThresholdGraph union_merge(std::span<const ThresholdGraph> parts) {
  if (parts.empty()) throw InvalidArgument("union_merge of an empty list");
  int n = 0;
  std::vector<int> cols;
  for (const auto& t : parts) {
    n += t.n();
    const auto c = t.below_columns();
    if (c.size() > cols.size()) cols.resize(c.size(), 0);
    for (std::size_t i = 0; i < c.size(); ++i) cols[i] += c[i];
  }
  return ThresholdGraph::from_below_columns(n, std::move(cols));
}

ThresholdGraph complement_threshold(const ThresholdGraph& t) {
  const auto d = t.degrees();
  const int n = t.n();
  std::vector<int> comp(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) comp[static_cast<std::size_t>(i)] = n - 1 - d.at(n - i);
  return ThresholdGraph::from_degrees(DegreeSequence(std::move(comp)));
}

ThresholdGraph cycle_dominator(int n) {
  if (n < 8) throw InvalidArgument("cycle_dominator needs n >= 8, got " + std::to_string(n));
  const int h = isqrt(2 * static_cast<std::int64_t>(n));
  const int f = 2 * n - (h * h + h) >= 0 ? h : h - 1;
  const int leftover = n - f * (f + 1) / 2;
  std::vector<int> cols;
  for (int i = 1; i <= f; ++i) cols.push_back(f + 1 - i + (i <= leftover ? 1 : 0));
  return ThresholdGraph::from_below_columns(n, std::move(cols));
}

ThresholdGraph pineapple(int n, int q) {
  if (q < 2 || q > n) {
    throw InvalidArgument("pineapple: q=" + std::to_string(q) + " outside 2.." + std::to_string(n));
  }
  const auto len = static_cast<std::size_t>(n - 1);
  std::unique_ptr<bool[]> seq(new bool[len]);
  for (std::size_t i = 0; i < len; ++i) {
    seq[i] = i < static_cast<std::size_t>(q - 2) || i + 1 == len;
  }
  return ThresholdGraph::from_creation_sequence(std::span<const bool>(seq.get(), len));
}

int extremal_clique_size(int n) {
  if (n < 1) throw InvalidArgument("extremal_clique_size needs n >= 1");
  return std::min((2 * n + 1) / 3 + 1, n);
}

ThresholdGraph clique_plus_isolated_threshold(int n) {
  const int c = extremal_clique_size(n);
  std::vector<int> cols;
  for (int i = 1; i < c; ++i) cols.push_back(c - i);
  return ThresholdGraph::from_below_columns(n, std::move(cols));
}

}  // namespace lapdom
