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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lapdom/graph.hpp"
#include "lapdom/spectra.hpp"

namespace lapdom {

enum class CheckKind { kGmb, kBrouwer, kStd };

std::string_view check_kind_name(CheckKind kind) noexcept;
std::optional<CheckKind> parse_check_kind(std::string_view name) noexcept;

struct ScanOptions {
  CheckKind check = CheckKind::kBrouwer;
  int jobs = 1;
  double tolerance = kDefaultTolerance;
  // Records read and evaluated per parallel round.
  std::size_t batch_size = 4096;
  // Called after each round with the number of records done so far.
  std::function<void(std::uint64_t)> progress;
};

// A record is identified by its 1-based position: the line number for a
// graph6 stream, mask + 1 for scan_all_labeled.
struct ScanEvent {
  std::uint64_t index = 0;
  std::string graph6;
  int k = 0;
  double margin = 0.0;
};

struct InputError {
  std::uint64_t line = 0;
  std::string message;
};

struct ScanSummary {
  static constexpr std::size_t kMaxNearSamples = 20;

  CheckKind check = CheckKind::kBrouwer;
  std::uint64_t records = 0;
  std::vector<ScanEvent> violations;
  // Records that hold but come within kNearEqualityMargin of the bound at
  // some k (saturated GMB/std entries excluded, see saturated()).
  std::uint64_t near_equality = 0;
  std::vector<ScanEvent> near_samples;
  std::vector<InputError> input_errors;
  // Smallest and largest per-k margin over all records; 0 when empty.
  double min_margin = 0.0;
  double max_margin = 0.0;
  std::uint64_t rechecked = 0;
  double wall_seconds = 0.0;
  int jobs = 1;
};

struct RecordOutcome {
  bool holds = true;
  int worst_k = 0;
  double min_margin = 0.0;
  double max_margin = 0.0;
  bool rechecked = false;
  int near_k = 0;  // first near-equality k, 0 if none
  double near_margin = 0.0;
};

RecordOutcome evaluate_record(const Graph& g, CheckKind check, double tolerance);

// One graph6 record per line. Blank lines are skipped; malformed lines are
// recorded in input_errors and the scan continues.
ScanSummary scan_graph6(std::istream& in, const ScanOptions& options);

// All 2^(n(n-1)/2) labeled graphs on n <= 7 nodes.
ScanSummary scan_all_labeled(int n, const ScanOptions& options);

}  // namespace lapdom
