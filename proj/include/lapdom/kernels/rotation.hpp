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

#include <span>
#include <string_view>

namespace lapdom::kernels {

enum class Isa { kScalar, kAvx2, kNeon };

std::string_view isa_name(Isa isa) noexcept;

// Inner loops of the Jacobi eigensolver.
//
//   rotate:       x' = c*x - s*y,  y' = s*x + c*y  (elementwise, in place)
//   sum_squares:  sum of x_i^2
//
// Every variant of `rotate` is bitwise identical to the scalar reference (no
// FMA contraction). `sum_squares` may differ in the last bits because lanes
// reassociate the sum.
struct RotationKernels {
  Isa isa;
  void (*rotate)(std::span<double> x, std::span<double> y, double c, double s);
  double (*sum_squares)(std::span<const double> x);
};

const RotationKernels& scalar_kernels() noexcept;

// Null when the variant was not compiled in or the CPU lacks the extension.
const RotationKernels* avx2_kernels() noexcept;
const RotationKernels* neon_kernels() noexcept;

// Best supported variant, chosen once. Setting LAPDOM_SIMD=scalar in the
// environment forces the scalar reference.
const RotationKernels& active_kernels() noexcept;

}  // namespace lapdom::kernels
