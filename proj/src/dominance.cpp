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

#include "lapdom/dominance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lapdom/error.hpp"
#include "lapdom/partitions.hpp"

namespace lapdom {
namespace {

std::vector<std::int64_t> conjugate_prefixes(const ThresholdGraph& t) {
  const auto c = t.conjugate_degrees();
  std::vector<std::int64_t> out(static_cast<std::size_t>(c.size()));
  std::int64_t acc = 0;
  for (int i = 1; i <= c.size(); ++i) out[static_cast<std::size_t>(i - 1)] = acc += c.at(i);
  return out;
}

Verdict summarize(const InequalityReport& r) { return {r.holds, r.worst_k, r.min_margin}; }

template <class WitnessFn>
void fill(DominanceReport& report, const Graph& g, const Spectrum& s,
          const DominanceOptions& options, WitnessFn witness_at) {
  const int n = g.n();
  const std::int64_t m = g.m();
  report.n = n;
  report.m = m;
  report.spectrum = s;
  report.entries.clear();

  const auto gmb = check_gmb(g, s, options.tolerance);
  const auto brouwer = check_brouwer(g, s, options.tolerance);
  report.gmb = summarize(gmb);
  report.brouwer = summarize(brouwer);

  report.std = Verdict{true, 0, std::numeric_limits<double>::infinity()};
  const auto prefix = prefix_sums(s);
  for (int k = 1; k <= n; ++k) {
    const auto idx = static_cast<std::size_t>(k - 1);
    auto [witness, witness_prefix] = witness_at(k);
    DominanceEntry e{k,
                     prefix[idx],
                     gmb.entries[idx].effective_bound,
                     brouwer_bound(m, k),
                     brouwer_effective_bound(n, m, k),
                     witness_prefix,
                     std::move(witness),
                     static_cast<double>(witness_prefix) - prefix[idx]};
    if (e.margin < report.std.min_margin) {
      report.std.min_margin = e.margin;
      report.std.worst_k = k;
    }
    if (e.margin < -options.tolerance) report.std.holds = false;
    report.entries.push_back(std::move(e));
  }
  if (n == 0) report.std.min_margin = 0.0;

  report.k_star = count_above_mean(s);
  report.energy = laplacian_energy(s);
  const int kw = std::max(report.k_star, 1);
  report.witness_energy = threshold_energy(brouwer_extremal(n, m, kw));
}

template <class WitnessFn>
DominanceReport certify(const Graph& g, const DominanceOptions& options, WitnessFn witness_at) {
  DominanceReport report;
  fill(report, g, eigenvalues(g, options.solver), options, witness_at);
  if (!(report.gmb.holds && report.brouwer.holds && report.std.holds)) {
    fill(report, g, eigenvalues(g, options.solver.tightened()), options, witness_at);
    report.rechecked = true;
  }
  return report;
}

// Smallest x with x(x+1)/2 >= rem.
int smallest_cover(std::int64_t rem) {
  int x = static_cast<int>(std::sqrt(2.0 * static_cast<double>(rem)));
  while (x > 0 && static_cast<std::int64_t>(x) * (x - 1) / 2 >= rem) --x;
  while (static_cast<std::int64_t>(x) * (x + 1) / 2 < rem) ++x;
  return x;
}

// Lexicographically smallest strictly decreasing completion summing to rem.
void complete_smallest(std::vector<int>& cols, std::int64_t rem) {
  while (rem > 0) {
    const int x = smallest_cover(rem);
    cols.push_back(x);
    rem -= x;
  }
}

}  // namespace

DominanceReport std_constructive(const Graph& g, const DominanceOptions& options) {
  return certify(g, options, [&](int k) {
    auto c = brouwer_extremal_construction(g.n(), g.m(), k);
    return std::pair{std::move(c.graph), c.prefix_sum};
  });
}

DominanceReport std_oracle(const Graph& g, const DominanceOptions& options) {
  const auto maxima = threshold_prefix_maxima(g.n(), g.m(), options.oracle_limit);
  return certify(g, options, [&](int k) {
    const auto idx = static_cast<std::size_t>(k - 1);
    return std::pair{maxima.witnesses[idx], maxima.maxima[idx]};
  });
}

EnergyWitness energy_witness(const Graph& g, const DominanceOptions& options) {
  const int n = g.n();
  auto evaluate = [&](const Spectrum& s) {
    const int k_star = count_above_mean(s);
    auto c = brouwer_extremal_construction(n, g.m(), std::max(k_star, 1));
    const auto prefix = prefix_sums(s);
    const double lambda_prefix = k_star == 0 ? 0.0 : prefix[static_cast<std::size_t>(k_star - 1)];
    const double margin = static_cast<double>(c.prefix_sum) - lambda_prefix;
    EnergyWitness w{std::move(c.graph), k_star, laplacian_energy(s), 0.0};
    w.witness_energy = threshold_energy(w.graph);
    return std::pair{std::move(w), margin};
  };
  auto [w, margin] = evaluate(eigenvalues(g, options.solver));
  if (margin < -options.tolerance || w.witness_energy < w.energy - options.tolerance) {
    std::tie(w, margin) = evaluate(eigenvalues(g, options.solver.tightened()));
    if (margin < -options.tolerance) {
      throw ConjectureViolation("energy witness fails to dominate at k*=" +
                                    std::to_string(w.k_star) + " (margin " +
                                    std::to_string(margin) + ")",
                                w.k_star, margin);
    }
    if (w.witness_energy < w.energy - options.tolerance) {
      throw ConjectureViolation("energy witness has lower energy: " +
                                    std::to_string(w.witness_energy) + " < " +
                                    std::to_string(w.energy),
                                w.k_star, w.witness_energy - w.energy);
    }
  }
  return w;
}

double threshold_energy(const ThresholdGraph& t) {
  const auto c = t.conjugate_degrees();
  const std::int64_t n = t.n();
  const std::int64_t twice_m = 2 * t.m();
  std::int64_t total = 0;
  for (const int d : c.values()) total += std::abs(n * d - twice_m);
  return static_cast<double>(total) / static_cast<double>(n);
}

ThresholdEnumerator::ThresholdEnumerator(int n, std::int64_t m) : n_(n), m_(m) {
  if (n < 1 || m < 0 || m > static_cast<std::int64_t>(Graph::triangle_size(n))) done_ = true;
}

std::optional<ThresholdGraph> ThresholdEnumerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    complete_smallest(cols_, m_);
  } else if (!advance()) {
    done_ = true;
    return std::nullopt;
  }
  return ThresholdGraph::from_below_columns(n_, cols_);
}

bool ThresholdEnumerator::advance() {
  std::int64_t before = 0;
  for (const int c : cols_) before += c;
  // Walk back from the last part: raise position j to the smallest feasible
  // larger value and refill the tail as small as possible.
  for (std::size_t j = cols_.size(); j-- > 0;) {
    before -= cols_[j];
    const std::int64_t rem = m_ - before;
    const int bound = j == 0 ? n_ - 1 : cols_[j - 1] - 1;
    const auto top = static_cast<int>(std::min<std::int64_t>(bound, rem));
    for (int v = cols_[j] + 1; v <= top; ++v) {
      if (rem - v <= static_cast<std::int64_t>(v) * (v - 1) / 2) {
        cols_.resize(j);
        cols_.push_back(v);
        complete_smallest(cols_, rem - v);
        return true;
      }
    }
  }
  return false;
}

AllThresholdEnumerator::AllThresholdEnumerator(int n) : n_(n), current_(n, 0) {}

std::optional<ThresholdGraph> AllThresholdEnumerator::next() {
  const auto total = static_cast<std::int64_t>(Graph::triangle_size(n_));
  while (m_ <= total) {
    if (auto t = current_.next()) return t;
    if (++m_ <= total) current_ = ThresholdEnumerator(n_, m_);
  }
  return std::nullopt;
}

std::uint64_t count_threshold(int n, std::int64_t m, std::uint64_t cap) {
  if (n < 1 || m < 0) return 0;
  const auto total = static_cast<std::int64_t>(Graph::triangle_size(n));
  if (m > total) return 0;
  // Subsets of {1..n-1} summing to m are in bijection with those summing to
  // total - m.
  const auto target = static_cast<std::size_t>(std::min(m, total - m));
  std::vector<std::uint64_t> ways(target + 1, 0);
  ways[0] = 1;
  for (int part = 1; part < n; ++part) {
    const auto p = static_cast<std::size_t>(part);
    if (p > target) break;
    for (std::size_t s = target; s >= p; --s) {
      const std::uint64_t add = ways[s - p];
      ways[s] = add > cap - ways[s] ? cap : ways[s] + add;
      if (s == p) break;
    }
  }
  return ways[target];
}

PrefixMaxima threshold_prefix_maxima(int n, std::int64_t m, std::uint64_t limit) {
  if (n < 1 || m < 0 || m > static_cast<std::int64_t>(Graph::triangle_size(n))) {
    throw InvalidArgument("no threshold graph with n=" + std::to_string(n) +
                          ", m=" + std::to_string(m));
  }
  const std::uint64_t capped = limit == UINT64_MAX ? limit : limit + 1;
  const std::uint64_t count = count_threshold(n, m, capped);
  if (count > limit) {
    throw LimitExceeded("threshold enumeration for n=" + std::to_string(n) + ", m=" +
                            std::to_string(m) + " exceeds " + std::to_string(limit) + " graphs",
                        count);
  }
  PrefixMaxima out;
  out.maxima.assign(static_cast<std::size_t>(n), -1);
  out.witnesses.assign(static_cast<std::size_t>(n), ThresholdGraph::edgeless(n));
  ThresholdEnumerator e(n, m);
  while (auto t = e.next()) {
    ++out.graphs;
    const auto prefix = conjugate_prefixes(*t);
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      if (prefix[i] > out.maxima[i]) {
        out.maxima[i] = prefix[i];
        out.witnesses[i] = *t;
      }
    }
  }
  return out;
}

MaxEnergy max_energy_threshold(int n) {
  if (n < 1 || n > 20) {
    throw InvalidArgument("max_energy_threshold needs 1 <= n <= 20, got " + std::to_string(n));
  }
  std::optional<ThresholdGraph> best;
  std::int64_t best_scaled = -1;
  AllThresholdEnumerator e(n);
  while (auto t = e.next()) {
    const auto c = t->conjugate_degrees();
    std::int64_t scaled = 0;
    for (const int d : c.values()) scaled += std::abs(static_cast<std::int64_t>(n) * d - 2 * t->m());
    if (scaled > best_scaled || (scaled == best_scaled && compare_columns(*t, *best) < 0)) {
      best_scaled = scaled;
      best = std::move(t);
    }
  }
  return {*best, static_cast<double>(best_scaled) / n};
}

}  // namespace lapdom
