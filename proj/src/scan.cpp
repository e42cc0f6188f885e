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

#include "lapdom/scan.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <istream>

#include "lapdom/dominance.hpp"
#include "lapdom/error.hpp"
#include "lapdom/graph6.hpp"
#include "lapdom/ordered_pool.hpp"

namespace lapdom {
namespace {

struct Slot {
  std::uint64_t index = 0;
  std::optional<RecordOutcome> outcome;
  std::string error;
};

class Accumulator {
 public:
  explicit Accumulator(const ScanOptions& options) : options_(options) {
    summary_.check = options.check;
    summary_.jobs = std::max(1, options.jobs);
  }

  // `graph6` is only called for records that end up in a list.
  template <class Graph6Fn>
  void add(const Slot& slot, Graph6Fn graph6) {
    if (!slot.outcome) {
      summary_.input_errors.push_back({slot.index, slot.error});
      return;
    }
    const auto& r = *slot.outcome;
    ++summary_.records;
    if (r.rechecked) ++summary_.rechecked;
    if (!seen_) {
      summary_.min_margin = r.min_margin;
      summary_.max_margin = r.max_margin;
      seen_ = true;
    } else {
      summary_.min_margin = std::min(summary_.min_margin, r.min_margin);
      summary_.max_margin = std::max(summary_.max_margin, r.max_margin);
    }
    if (!r.holds) {
      summary_.violations.push_back({slot.index, graph6(), r.worst_k, r.min_margin});
    } else if (r.near_k > 0) {
      ++summary_.near_equality;
      if (summary_.near_samples.size() < ScanSummary::kMaxNearSamples) {
        summary_.near_samples.push_back({slot.index, graph6(), r.near_k, r.near_margin});
      }
    }
  }

  void progress() const {
    if (options_.progress) options_.progress(summary_.records + summary_.input_errors.size());
  }

  ScanSummary finish(std::chrono::steady_clock::time_point start) {
    summary_.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return std::move(summary_);
  }

 private:
  const ScanOptions& options_;
  ScanSummary summary_;
  bool seen_ = false;
};

RecordOutcome from_report(const InequalityReport& r) {
  RecordOutcome out{r.holds, r.worst_k, r.min_margin, 0.0, r.rechecked};
  out.max_margin = r.entries.empty() ? 0.0 : r.entries.front().margin;
  for (const auto& e : r.entries) {
    out.max_margin = std::max(out.max_margin, e.margin);
    if (e.near_equality && out.near_k == 0) {
      out.near_k = e.k;
      out.near_margin = e.margin;
    }
  }
  if (r.entries.empty()) out.min_margin = 0.0;
  return out;
}

std::string_view trim_line(std::string_view line) {
  while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
    line.remove_suffix(1);
  }
  while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
  return line;
}

}  // namespace

std::string_view check_kind_name(CheckKind kind) noexcept {
  switch (kind) {
    case CheckKind::kGmb: return "gmb";
    case CheckKind::kBrouwer: return "brouwer";
    case CheckKind::kStd: return "std";
  }
  return "?";
}

std::optional<CheckKind> parse_check_kind(std::string_view name) noexcept {
  if (name == "gmb") return CheckKind::kGmb;
  if (name == "brouwer") return CheckKind::kBrouwer;
  if (name == "std") return CheckKind::kStd;
  return std::nullopt;
}

RecordOutcome evaluate_record(const Graph& g, CheckKind check, double tolerance) {
  switch (check) {
    case CheckKind::kGmb: return from_report(check_gmb(g, tolerance));
    case CheckKind::kBrouwer: return from_report(check_brouwer(g, tolerance));
    case CheckKind::kStd: {
      DominanceOptions options;
      options.tolerance = tolerance;
      const auto report = std_constructive(g, options);
      RecordOutcome out{report.std.holds, report.std.worst_k, report.std.min_margin, 0.0,
                        report.rechecked};
      for (const auto& e : report.entries) {
        out.max_margin = std::max(out.max_margin, e.margin);
        if (out.near_k == 0 && std::abs(e.margin) < kNearEqualityMargin &&
            !saturated(e.lambda_prefix, static_cast<double>(e.witness_prefix), report.m)) {
          out.near_k = e.k;
          out.near_margin = e.margin;
        }
      }
      return out;
    }
  }
  return {};
}

ScanSummary scan_graph6(std::istream& in, const ScanOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  Accumulator acc(options);
  const std::size_t batch = std::max<std::size_t>(1, options.batch_size);
  std::vector<std::string> lines;
  std::vector<Slot> slots;
  std::uint64_t line_no = 0;
  std::string line;
  bool eof = false;
  while (!eof) {
    lines.clear();
    slots.clear();
    while (lines.size() < batch) {
      if (!std::getline(in, line)) {
        eof = true;
        break;
      }
      ++line_no;
      const auto text = trim_line(line);
      if (text.empty()) continue;
      lines.emplace_back(text);
      slots.push_back(Slot{line_no, std::nullopt, {}});
    }
    parallel_for_index(lines.size(), options.jobs, [&](std::size_t i) {
      try {
        slots[i].outcome = evaluate_record(decode_graph6(lines[i]), options.check, options.tolerance);
      } catch (const ParseError& e) {
        slots[i].error = e.what();
      }
    });
    for (std::size_t i = 0; i < slots.size(); ++i) {
      acc.add(slots[i], [&] { return lines[i]; });
    }
    acc.progress();
  }
  return acc.finish(start);
}

ScanSummary scan_all_labeled(int n, const ScanOptions& options) {
  if (n < 1 || n > 7) {
    throw InvalidArgument("scan_all_labeled needs 1 <= n <= 7, got " + std::to_string(n));
  }
  const auto start = std::chrono::steady_clock::now();
  Accumulator acc(options);
  const std::uint64_t total = std::uint64_t{1} << Graph::triangle_size(n);
  const std::size_t batch = std::max<std::size_t>(1, options.batch_size);
  std::vector<Slot> slots;
  for (std::uint64_t first = 0; first < total; first += batch) {
    const auto count = static_cast<std::size_t>(std::min<std::uint64_t>(batch, total - first));
    slots.assign(count, Slot{});
    parallel_for_index(count, options.jobs, [&](std::size_t i) {
      const std::uint64_t mask = first + i;
      slots[i].index = mask + 1;
      slots[i].outcome = evaluate_record(Graph::from_mask(n, mask), options.check, options.tolerance);
    });
    for (std::size_t i = 0; i < count; ++i) {
      acc.add(slots[i], [&] { return encode_graph6(Graph::from_mask(n, first + i)); });
    }
    acc.progress();
  }
  return acc.finish(start);
}

}  // namespace lapdom
