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

#include <atomic>
#include <sstream>

#include "lapdom/dominance.hpp"
#include "lapdom/graph6.hpp"
#include "lapdom/ordered_pool.hpp"
#include "lapdom/scan.hpp"

using lapdom::CheckKind;
using lapdom::ScanOptions;
using lapdom::ScanSummary;

namespace {

std::string threshold_stream(int n) {
  std::string out;
  lapdom::AllThresholdEnumerator e(n);
  while (auto t = e.next()) out += lapdom::encode_graph6(lapdom::realize(*t)) + "\n";
  return out;
}

ScanSummary scan_text(const std::string& text, CheckKind check, int jobs,
                      std::size_t batch = 4096) {
  std::istringstream in(text);
  ScanOptions opts;
  opts.check = check;
  opts.jobs = jobs;
  opts.batch_size = batch;
  return lapdom::scan_graph6(in, opts);
}

void check_same(const ScanSummary& a, const ScanSummary& b) {
  CHECK(a.records == b.records);
  CHECK(a.near_equality == b.near_equality);
  CHECK(a.min_margin == b.min_margin);
  CHECK(a.max_margin == b.max_margin);
  REQUIRE(a.violations.size() == b.violations.size());
  REQUIRE(a.near_samples.size() == b.near_samples.size());
  for (std::size_t i = 0; i < a.near_samples.size(); ++i) {
    CHECK(a.near_samples[i].index == b.near_samples[i].index);
    CHECK(a.near_samples[i].graph6 == b.near_samples[i].graph6);
    CHECK(a.near_samples[i].k == b.near_samples[i].k);
    CHECK(a.near_samples[i].margin == b.near_samples[i].margin);
  }
  REQUIRE(a.input_errors.size() == b.input_errors.size());
  for (std::size_t i = 0; i < a.input_errors.size(); ++i) {
    CHECK(a.input_errors[i].line == b.input_errors[i].line);
    CHECK(a.input_errors[i].message == b.input_errors[i].message);
  }
}

}  // namespace

TEST_CASE("parallel_for_index visits each index once") {
  for (int jobs : {1, 2, 8}) {
    std::vector<std::atomic<int>> hits(1000);
    lapdom::parallel_for_index(hits.size(), jobs, [&](std::size_t i) { ++hits[i]; });
    for (const auto& h : hits) CHECK(h.load() == 1);
  }
  CHECK_THROWS_AS(lapdom::parallel_for_index(100, 4,
                                             [](std::size_t i) {
                                               if (i == 57) throw std::runtime_error("boom");
                                             }),
                  std::runtime_error);
}

TEST_CASE("check kind names") {
  for (auto kind : {CheckKind::kGmb, CheckKind::kBrouwer, CheckKind::kStd}) {
    CHECK(lapdom::parse_check_kind(lapdom::check_kind_name(kind)) == kind);
  }
  CHECK_FALSE(lapdom::parse_check_kind("nope").has_value());
}

TEST_CASE("threshold stream on 10 nodes: GMB holds with zero margins") {
  const auto s = scan_text(threshold_stream(10), CheckKind::kGmb, 2, 100);
  CHECK(s.records == 512);
  CHECK(s.violations.empty());
  CHECK(s.input_errors.empty());
  CHECK(std::abs(s.min_margin) < 1e-9);
  CHECK(std::abs(s.max_margin) < 1e-9);
  CHECK(s.near_samples.size() == ScanSummary::kMaxNearSamples);
}

TEST_CASE("empty stream") {
  const auto s = scan_text("", CheckKind::kBrouwer, 4);
  CHECK(s.records == 0);
  CHECK(s.violations.empty());
  CHECK(s.input_errors.empty());
  CHECK(s.min_margin == 0.0);
}

TEST_CASE("malformed records are reported with line numbers and the scan continues") {
  const auto s = scan_text("DQc\n\nD Qc\nA_\r\nDQ\n@\n", CheckKind::kBrouwer, 3, 2);
  CHECK(s.records == 3);
  REQUIRE(s.input_errors.size() == 2);
  CHECK(s.input_errors[0].line == 3);
  CHECK(s.input_errors[1].line == 5);
}

TEST_CASE("summaries do not depend on worker count or batch size") {
  std::string text;
  for (std::uint64_t mask = 0; mask < 1024; ++mask) {
    text += lapdom::encode_graph6(lapdom::Graph::from_mask(5, mask)) + "\n";
    if (mask % 97 == 0) text += "bad record\n";
  }
  for (auto check : {CheckKind::kGmb, CheckKind::kBrouwer, CheckKind::kStd}) {
    const auto ref = scan_text(text, check, 1);
    for (int jobs : {2, 8}) {
      for (std::size_t batch : {std::size_t{1}, std::size_t{37}, std::size_t{4096}}) {
        check_same(ref, scan_text(text, check, jobs, batch));
      }
    }
  }
}

TEST_CASE("scan_all_labeled") {
  ScanOptions opts;
  opts.jobs = 4;
  opts.check = CheckKind::kStd;
  std::uint64_t last_progress = 0;
  opts.progress = [&](std::uint64_t done) { last_progress = done; };
  const auto s = lapdom::scan_all_labeled(5, opts);
  CHECK(s.records == 1024);
  CHECK(last_progress == 1024);
  CHECK(s.violations.empty());
  CHECK(s.jobs == 4);
  REQUIRE_FALSE(s.near_samples.empty());
  // Index is mask + 1, so the sample decodes to the matching mask.
  const auto& first = s.near_samples.front();
  CHECK(lapdom::decode_graph6(first.graph6) == lapdom::Graph::from_mask(5, first.index - 1));
  CHECK_THROWS(lapdom::scan_all_labeled(8, opts));
}

TEST_CASE("record evaluation") {
  const auto k6 = lapdom::Graph::complete_plus_isolated(6, 8);
  const auto b = lapdom::evaluate_record(k6, CheckKind::kBrouwer, 1e-7);
  CHECK(b.holds);
  CHECK(b.near_k == 5);
  const auto c8 = lapdom::evaluate_record(lapdom::Graph::cycle(8), CheckKind::kBrouwer, 1e-7);
  CHECK(c8.holds);
  CHECK(c8.near_k == 0);
  CHECK(c8.worst_k == 3);
  // Saturated k (both sides equal 2m) is not a near-equality event.
  const auto g = lapdom::evaluate_record(lapdom::Graph::cycle(8), CheckKind::kGmb, 1e-7);
  CHECK(g.near_k == 0);
}
