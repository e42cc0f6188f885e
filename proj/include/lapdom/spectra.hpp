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

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "lapdom/graph.hpp"
#include "lapdom/kernels/rotation.hpp"

namespace lapdom {

// Default slack on every floating-point inequality verdict.
inline constexpr double kDefaultTolerance = 1e-7;
// Margins below this are reported as near-equality.
inline constexpr double kNearEqualityMargin = 1e-4;

// Dense row-major symmetric matrix.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0.0) {}

  int n() const noexcept { return n_; }
  double& operator()(int i, int j) noexcept { return data_[index(i, j)]; }
  double operator()(int i, int j) const noexcept { return data_[index(i, j)]; }
  std::span<double> row(int i) noexcept {
    return {data_.data() + static_cast<std::size_t>(i) * n_, static_cast<std::size_t>(n_)};
  }
  std::span<const double> row(int i) const noexcept {
    return {data_.data() + static_cast<std::size_t>(i) * n_, static_cast<std::size_t>(n_)};
  }

 private:
  std::size_t index(int i, int j) const noexcept {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
  }

  int n_;
  std::vector<double> data_;
};

// L = D - A, 0-based indices.
SymmetricMatrix laplacian(const Graph& g);

struct SolverOptions {
  // Stop once the off-diagonal Frobenius norm is below
  // relative_tolerance * (1 + ||A||_F).
  double relative_tolerance = 1e-12;
  int max_sweeps = 64;
  // Null selects kernels::active_kernels().
  const kernels::RotationKernels* kernels = nullptr;

  SolverOptions tightened(double factor = 100.0) const {
    SolverOptions t = *this;
    t.relative_tolerance /= factor;
    return t;
  }
};

// Cyclic Jacobi. Returns eigenvalues in nonincreasing order. Throws
// SolverError if the sweep budget runs out.
std::vector<double> symmetric_eigenvalues(SymmetricMatrix a, const SolverOptions& options = {});

// Laplacian spectrum: nonincreasing, lambda_n = 0 up to rounding.
class Spectrum {
 public:
  // Sorts `values` nonincreasingly and clamps values in (-1e-9, 0) to 0.
  Spectrum(std::vector<double> values, std::int64_t m);

  int n() const noexcept { return static_cast<int>(values_.size()); }
  std::int64_t m() const noexcept { return m_; }
  std::span<const double> values() const noexcept { return values_; }
  // 1-based lambda_i.
  double at(int i) const { return values_.at(static_cast<std::size_t>(i - 1)); }
  double mean_degree() const noexcept {
    return n() == 0 ? 0.0 : 2.0 * static_cast<double>(m_) / n();
  }

 private:
  std::vector<double> values_;
  std::int64_t m_;
};

Spectrum eigenvalues(const Graph& g, const SolverOptions& options = {});

// s_k = lambda_1 + ... + lambda_k for k = 1..n, compensated summation.
std::vector<double> prefix_sums(const Spectrum& s);

// Sum of |lambda_i - 2m/n|.
double laplacian_energy(const Spectrum& s);

// 2 * sum_{i <= k*} (lambda_i - 2m/n) with k* = count_above_mean(s).
double energy_via_prefix(const Spectrum& s);

// |{i : lambda_i > 2m/n + band}|.
int count_above_mean(const Spectrum& s, double band = 1e-9);

// Both sides already equal the full trace 2m. Equality there holds for every
// graph, so it is not reported as near-equality.
inline bool saturated(double prefix, double bound, std::int64_t m) noexcept {
  const double total = 2.0 * static_cast<double>(m);
  return bound == total && std::abs(prefix - total) < kNearEqualityMargin;
}

struct InequalityEntry {
  int k = 0;
  double prefix = 0.0;          // sum_{i<=k} lambda_i
  double bound = 0.0;           // GMB: sum d*_i; Brouwer: m + k(k+1)/2
  std::int64_t effective_bound = 0;  // Brouwer only: min{kn, m+k(k+1)/2, 2m}
  double margin = 0.0;          // bound - prefix
  bool holds = true;            // prefix <= bound + tolerance
  bool near_equality = false;   // |margin| < kNearEqualityMargin, GMB: unsaturated
};

struct InequalityReport {
  std::vector<InequalityEntry> entries;
  bool holds = true;
  int worst_k = 0;              // k with the smallest margin (first on ties)
  double min_margin = 0.0;
  // True when a violation triggered a recomputation at tightened tolerance.
  bool rechecked = false;
};

// Grone-Merris-Bai: sum_{i<=k} lambda_i <= sum_{i<=k} d*_i.
InequalityReport check_gmb(const Graph& g, double tolerance = kDefaultTolerance);
InequalityReport check_gmb(const Graph& g, const Spectrum& s, double tolerance = kDefaultTolerance);

// Brouwer: sum_{i<=k} lambda_i <= m + k(k+1)/2.
InequalityReport check_brouwer(const Graph& g, double tolerance = kDefaultTolerance);
InequalityReport check_brouwer(const Graph& g, const Spectrum& s,
                               double tolerance = kDefaultTolerance);

// min{kn, m + k(k+1)/2, 2m}.
std::int64_t brouwer_effective_bound(int n, std::int64_t m, int k);
std::int64_t brouwer_bound(std::int64_t m, int k);

}  // namespace lapdom
