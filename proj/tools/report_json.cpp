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

#include "report_json.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "lapdom/graph6.hpp"

namespace lapdom::cli {
namespace {

Json rounded(std::span<const double> values) {
  Json out = Json::array();
  for (const double v : values) out.push_back(round12(v));
  return out;
}

Json ints(std::span<const int> values) {
  Json out = Json::array();
  for (const int v : values) out.push_back(v);
  return out;
}

Json verdict_json(const Verdict& v, const std::vector<int>& near_k) {
  return Json{{"holds", v.holds},
              {"worst_k", v.worst_k},
              {"min_margin", round12(v.min_margin)},
              {"near_equality_k", near_k}};
}

Json event_json(const ScanEvent& e) {
  return Json{{"index", e.index}, {"graph6", e.graph6}, {"k", e.k}, {"margin", round12(e.margin)}};
}

}  // namespace

double round12(double x) {
  if (!std::isfinite(x)) return x;
  if (std::abs(x) < 1e-12) return 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

std::string format12(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", round12(x));
  return buf;
}

NearEquality near_equality(const DominanceReport& report) {
  NearEquality out;
  auto near = [&](double bound, double prefix, bool skip_saturated) {
    return std::abs(bound - prefix) < kNearEqualityMargin &&
           !(skip_saturated && saturated(prefix, bound, report.m));
  };
  for (const auto& e : report.entries) {
    if (near(static_cast<double>(e.gmb_bound), e.lambda_prefix, true)) out.gmb.push_back(e.k);
    if (near(static_cast<double>(e.brouwer_bound), e.lambda_prefix, false)) out.brouwer.push_back(e.k);
    if (near(static_cast<double>(e.witness_prefix), e.lambda_prefix, true)) out.std.push_back(e.k);
  }
  return out;
}

Json analysis_json(const DominanceReport& report) {
  Json entries = Json::array();
  Json witnesses = Json::array();
  const auto near = near_equality(report);
  for (const auto& e : report.entries) {
    entries.push_back(Json{{"k", e.k},
                           {"lambda_prefix", round12(e.lambda_prefix)},
                           {"gmb_bound", e.gmb_bound},
                           {"brouwer_bound", e.brouwer_bound},
                           {"effective_bound", e.effective_bound},
                           {"witness_prefix", e.witness_prefix},
                           {"margin", round12(e.margin)}});
    witnesses.push_back(Json{{"k", e.k},
                             {"cols", ints(e.witness.below_columns())},
                             {"prefix_sum", e.witness_prefix}});
  }
  return Json{{"kind", "analysis"},
              {"id", report.id},
              {"n", report.n},
              {"m", report.m},
              {"spectrum", rounded(report.spectrum.values())},
              {"energy", round12(report.energy)},
              {"energy_via_prefix", round12(energy_via_prefix(report.spectrum))},
              {"k_star", report.k_star},
              {"witness_energy", round12(report.witness_energy)},
              {"checks",
               Json{{"gmb", verdict_json(report.gmb, near.gmb)},
                    {"brouwer", verdict_json(report.brouwer, near.brouwer)},
                    {"std", verdict_json(report.std, near.std)}}},
              {"entries", entries},
              {"witnesses", witnesses},
              {"rechecked", report.rechecked}};
}

Json threshold_json(const ThresholdGraph& t, const std::string& builder) {
  const auto g = realize(t);
  const auto spectrum = eigenvalues(g);
  return Json{{"kind", "threshold"},
              {"builder", builder},
              {"n", t.n()},
              {"m", t.m()},
              {"serialization", t.to_string()},
              {"cols", ints(t.below_columns())},
              {"conjugate", ints(t.conjugate_degrees().values())},
              {"spectrum", rounded(spectrum.values())},
              {"energy", round12(threshold_energy(t))},
              {"graph6", encode_graph6(g)}};
}

Json scan_json(const ScanSummary& summary, bool timing) {
  Json violations = Json::array();
  for (const auto& v : summary.violations) violations.push_back(event_json(v));
  Json near = Json::array();
  for (const auto& v : summary.near_samples) near.push_back(event_json(v));
  Json errors = Json::array();
  for (const auto& e : summary.input_errors) {
    errors.push_back(Json{{"line", e.line}, {"message", e.message}});
  }
  Json out{{"kind", "scan"},
           {"check", std::string(check_kind_name(summary.check))},
           {"records", summary.records},
           {"violations", violations},
           {"near_equality", summary.near_equality},
           {"near_samples", near},
           {"input_errors", errors},
           {"min_margin", round12(summary.min_margin)},
           {"max_margin", round12(summary.max_margin)},
           {"rechecked", summary.rechecked}};
  if (timing) {
    out["wall_seconds"] = summary.wall_seconds;
    out["jobs"] = summary.jobs;
  }
  return out;
}

}  // namespace lapdom::cli
