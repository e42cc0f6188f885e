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

// Scalar reference kernels.

#include <cstddef>

#include "lapdom/kernels/rotation.hpp"

namespace lapdom::kernels {
namespace {

void rotate_scalar(std::span<double> x, std::span<double> y, double c, double s) {
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = x[i];
    const double yi = y[i];
    x[i] = c * xi - s * yi;
    y[i] = s * xi + c * yi;
  }
}

double sum_squares_scalar(std::span<const double> x) {
  double acc = 0.0;
  for (const double v : x) acc += v * v;
  return acc;
}

constexpr RotationKernels kScalar{Isa::kScalar, &rotate_scalar, &sum_squares_scalar};

}  // namespace

const RotationKernels& scalar_kernels() noexcept { return kScalar; }

}  // namespace lapdom::kernels
