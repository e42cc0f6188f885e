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

// Cyclic Jacobi eigenvalue iteration for dense symmetric matrices.
//
// Each rotation updates rows p and q with the vector kernel, mirrors them into
// columns p and q, then sets the 2x2 pivot block in closed form. The matrix
// stays exactly symmetric throughout.

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "lapdom/error.hpp"
#include "lapdom/spectra.hpp"

namespace lapdom {
namespace {

double off_diagonal_norm(const SymmetricMatrix& a, const kernels::RotationKernels& k) {
  double acc = 0.0;
  for (int i = 0; i + 1 < a.n(); ++i) acc += k.sum_squares(a.row(i).subspan(static_cast<std::size_t>(i) + 1));
  return std::sqrt(2.0 * acc);
}

double frobenius_norm(const SymmetricMatrix& a, const kernels::RotationKernels& k) {
  double acc = 0.0;
  for (int i = 0; i < a.n(); ++i) acc += k.sum_squares(a.row(i));
  return std::sqrt(acc);
}

void rotate(SymmetricMatrix& a, int p, int q, const kernels::RotationKernels& k) {
  const double apq = a(p, q);
  const double app = a(p, p);
  const double aqq = a(q, q);
  const double theta = (aqq - app) / (2.0 * apq);
  double t = 1.0 / (std::abs(theta) + std::hypot(theta, 1.0));
  if (theta < 0.0) t = -t;
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  k.rotate(a.row(p), a.row(q), c, s);
  const int n = a.n();
  for (int r = 0; r < n; ++r) {
    if (r == p || r == q) continue;
    a(r, p) = a(p, r);
    a(r, q) = a(q, r);
  }
  a(p, p) = app - t * apq;
  a(q, q) = aqq + t * apq;
  a(p, q) = 0.0;
  a(q, p) = 0.0;
}

std::vector<double> sorted_diagonal(const SymmetricMatrix& a) {
  std::vector<double> d(static_cast<std::size_t>(a.n()));
  for (int i = 0; i < a.n(); ++i) d[static_cast<std::size_t>(i)] = a(i, i);
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

}  // namespace

std::vector<double> symmetric_eigenvalues(SymmetricMatrix a, const SolverOptions& options) {
  const auto& k = options.kernels != nullptr ? *options.kernels : kernels::active_kernels();
  const int n = a.n();
  const double threshold = options.relative_tolerance * (1.0 + frobenius_norm(a, k));
  for (int sweep = 0; sweep < options.max_sweeps; ++sweep) {
    if (off_diagonal_norm(a, k) < threshold) return sorted_diagonal(a);
    for (int p = 0; p + 1 < n; ++p)
      for (int q = p + 1; q < n; ++q)
        if (a(p, q) != 0.0) rotate(a, p, q, k);
  }
  const double off = off_diagonal_norm(a, k);
  if (off < threshold) return sorted_diagonal(a);
  throw SolverError("Jacobi iteration did not converge in " + std::to_string(options.max_sweeps) +
                    " sweeps (off-diagonal norm " + std::to_string(off) + ")");
}

}  // namespace lapdom
