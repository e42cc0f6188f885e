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
#include <optional>
#include <string>
#include <vector>

#include "lapdom/graph.hpp"
#include "lapdom/spectra.hpp"
#include "lapdom/threshold.hpp"

namespace lapdom {

struct DominanceOptions {
  double tolerance = kDefaultTolerance;
  SolverOptions solver;
  // std_oracle refuses (n, m) with more threshold graphs than this.
  std::uint64_t oracle_limit = 10'000'000;
};

struct DominanceEntry {
  int k = 0;
  double lambda_prefix = 0.0;
  std::int64_t gmb_bound = 0;        // d*_1 + ... + d*_k of G
  std::int64_t brouwer_bound = 0;    // m + k(k+1)/2
  std::int64_t effective_bound = 0;  // min{kn, m + k(k+1)/2, 2m}
  std::int64_t witness_prefix = 0;   // best threshold prefix sum found
  ThresholdGraph witness = ThresholdGraph::edgeless(1);
  double margin = 0.0;               // witness_prefix - lambda_prefix
};

struct Verdict {
  bool holds = true;
  int worst_k = 0;
  double min_margin = 0.0;
};

struct DominanceReport {
  std::string id;
  int n = 0;
  std::int64_t m = 0;
  Spectrum spectrum{{}, 0};
  std::vector<DominanceEntry> entries;
  Verdict gmb;
  Verdict brouwer;
  Verdict std;
  int k_star = 0;
  double energy = 0.0;          // LE(G)
  double witness_energy = 0.0;  // LE of the witness at k_star
  bool rechecked = false;
};

// Witness at every k is brouwer_extremal(n, m, k).
DominanceReport std_constructive(const Graph& g, const DominanceOptions& options = {});
// Witness at every k is the best of all threshold graphs on (n, m), first in
// enumeration order on ties. Throws LimitExceeded past options.oracle_limit.
DominanceReport std_oracle(const Graph& g, const DominanceOptions& options = {});

struct EnergyWitness {
  ThresholdGraph graph;
  int k_star = 0;
  double energy = 0.0;
  double witness_energy = 0.0;
};

// brouwer_extremal(n, m, k*) with k* = count_above_mean(spectrum). Throws
// ConjectureViolation if it fails to dominate G at k* or has lower energy.
EnergyWitness energy_witness(const Graph& g, const DominanceOptions& options = {});

// Exact: n * LE(T) = sum |n d*_i - 2m|.
double threshold_energy(const ThresholdGraph& t);

// Partitions of m into distinct parts <= n-1 as threshold graphs, in
// lexicographic order of the column lists. Infeasible (n, m) yields nothing.
class ThresholdEnumerator {
 public:
  ThresholdEnumerator(int n, std::int64_t m);
  std::optional<ThresholdGraph> next();

 private:
  bool advance();

  int n_;
  std::int64_t m_;
  std::vector<int> cols_;
  bool started_ = false;
  bool done_ = false;
};

// Every threshold graph on n nodes: m = 0, 1, ... and lexicographic within m.
class AllThresholdEnumerator {
 public:
  explicit AllThresholdEnumerator(int n);
  std::optional<ThresholdGraph> next();

 private:
  int n_;
  std::int64_t m_ = 0;
  ThresholdEnumerator current_;
};

// Number of threshold graphs on (n, m), saturating at `cap`.
std::uint64_t count_threshold(int n, std::int64_t m,
                              std::uint64_t cap = UINT64_MAX);

struct PrefixMaxima {
  std::vector<std::int64_t> maxima;      // index k-1
  std::vector<ThresholdGraph> witnesses;  // index k-1
  std::uint64_t graphs = 0;
};

// Per-k maximum of d*_1 + ... + d*_k over all threshold graphs on (n, m).
PrefixMaxima threshold_prefix_maxima(int n, std::int64_t m,
                                     std::uint64_t limit = 10'000'000);

struct MaxEnergy {
  ThresholdGraph graph;
  double energy = 0.0;
};

// Exhaustive over all 2^(n-1) threshold graphs, n <= 20. Ties go to the
// lexicographically smallest column list.
MaxEnergy max_energy_threshold(int n);

}  // namespace lapdom
