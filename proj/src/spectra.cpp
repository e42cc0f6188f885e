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

#include "lapdom/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "lapdom/error.hpp"
#include "lapdom/partitions.hpp"

namespace lapdom {
namespace {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

template <class BoundFn>
InequalityReport build_report(const Spectrum& s, double tolerance, bool skip_saturated,
                              BoundFn bound_at) {
  InequalityReport report;
  const auto prefix = prefix_sums(s);
  report.entries.reserve(prefix.size());
  report.min_margin = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= s.n(); ++k) {
    InequalityEntry e;
    e.k = k;
    e.prefix = prefix[static_cast<std::size_t>(k - 1)];
    bound_at(k, e);
    e.margin = e.bound - e.prefix;
    e.holds = e.prefix <= e.bound + tolerance;
    e.near_equality = std::abs(e.margin) < kNearEqualityMargin &&
                      !(skip_saturated && saturated(e.prefix, e.bound, s.m()));
    if (e.margin < report.min_margin) {
      report.min_margin = e.margin;
      report.worst_k = k;
    }
    report.holds = report.holds && e.holds;
    report.entries.push_back(e);
  }
  return report;
}

InequalityReport gmb_report(const Graph& g, const Spectrum& s, double tolerance) {
  const auto conj = conjugate(DegreeSequence::of(g));
  return build_report(s, tolerance, true, [&](int k, InequalityEntry& e) {
    e.bound = static_cast<double>(conj.prefix(k));
    e.effective_bound = conj.prefix(k);
  });
}

InequalityReport brouwer_report(const Graph& g, const Spectrum& s, double tolerance) {
  return build_report(s, tolerance, false, [&](int k, InequalityEntry& e) {
    e.bound = static_cast<double>(brouwer_bound(g.m(), k));
    e.effective_bound = brouwer_effective_bound(g.n(), g.m(), k);
  });
}

template <class ReportFn>
InequalityReport checked(const Graph& g, const Spectrum& s, double tolerance, ReportFn make) {
  auto report = make(g, s, tolerance);
  if (report.holds) return report;
  const auto tight = eigenvalues(g, SolverOptions{}.tightened());
  report = make(g, tight, tolerance);
  report.rechecked = true;
  return report;
}

}  // namespace

SymmetricMatrix laplacian(const Graph& g) {
  const int n = g.n();
  SymmetricMatrix l(n);
  for (int v = 0; v < n; ++v) l(v, v) = g.degrees()[static_cast<std::size_t>(v)];
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (g.adjacent0(u, v)) {
        l(u, v) = -1.0;
        l(v, u) = -1.0;
      }
    }
  }
  return l;
}

Spectrum::Spectrum(std::vector<double> values, std::int64_t m) : values_(std::move(values)), m_(m) {
  std::sort(values_.begin(), values_.end(), std::greater<>());
  for (auto& v : values_)
    if (v < 0.0 && v > -1e-9) v = 0.0;
}

Spectrum eigenvalues(const Graph& g, const SolverOptions& options) {
  return Spectrum(symmetric_eigenvalues(laplacian(g), options), g.m());
}

std::vector<double> prefix_sums(const Spectrum& s) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(s.n()));
  CompensatedSum acc;
  for (const double v : s.values()) {
    acc.add(v);
    out.push_back(acc.value());
  }
  return out;
}

double laplacian_energy(const Spectrum& s) {
  const double mean = s.mean_degree();
  CompensatedSum acc;
  for (const double v : s.values()) acc.add(std::abs(v - mean));
  return acc.value();
}

int count_above_mean(const Spectrum& s, double band) {
  const double mean = s.mean_degree();
  return static_cast<int>(std::count_if(s.values().begin(), s.values().end(),
                                        [&](double v) { return v > mean + band; }));
}

double energy_via_prefix(const Spectrum& s) {
  const double mean = s.mean_degree();
  const int k = count_above_mean(s);
  CompensatedSum acc;
  for (int i = 1; i <= k; ++i) acc.add(s.at(i) - mean);
  return 2.0 * acc.value();
}

InequalityReport check_gmb(const Graph& g, double tolerance) {
  return check_gmb(g, eigenvalues(g), tolerance);
}

InequalityReport check_gmb(const Graph& g, const Spectrum& s, double tolerance) {
  return checked(g, s, tolerance, gmb_report);
}

InequalityReport check_brouwer(const Graph& g, double tolerance) {
  return check_brouwer(g, eigenvalues(g), tolerance);
}

InequalityReport check_brouwer(const Graph& g, const Spectrum& s, double tolerance) {
  return checked(g, s, tolerance, brouwer_report);
}

std::int64_t brouwer_bound(std::int64_t m, int k) {
  return m + static_cast<std::int64_t>(k) * (k + 1) / 2;
}

std::int64_t brouwer_effective_bound(int n, std::int64_t m, int k) {
  return std::min({static_cast<std::int64_t>(k) * n, brouwer_bound(m, k), 2 * m});
}

}  // namespace lapdom
