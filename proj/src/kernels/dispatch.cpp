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

#include <cstdlib>
#include <string_view>

#include "lapdom/kernels/rotation.hpp"

namespace lapdom::kernels {

namespace detail {
#if defined(LAPDOM_HAVE_AVX2_KERNELS)
void rotate_avx2(std::span<double> x, std::span<double> y, double c, double s);
double sum_squares_avx2(std::span<const double> x);
#endif
#if defined(LAPDOM_HAVE_NEON_KERNELS)
void rotate_neon(std::span<double> x, std::span<double> y, double c, double s);
double sum_squares_neon(std::span<const double> x);
#endif
}  // namespace detail

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::kScalar: return "scalar";
    case Isa::kAvx2: return "avx2";
    case Isa::kNeon: return "neon";
  }
  return "unknown";
}

const RotationKernels* avx2_kernels() noexcept {
#if defined(LAPDOM_HAVE_AVX2_KERNELS)
  static const bool supported = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") != 0;
  }();
  static constexpr RotationKernels k{Isa::kAvx2, &detail::rotate_avx2, &detail::sum_squares_avx2};
  return supported ? &k : nullptr;
#else
  return nullptr;
#endif
}

const RotationKernels* neon_kernels() noexcept {
#if defined(LAPDOM_HAVE_NEON_KERNELS)
  static constexpr RotationKernels k{Isa::kNeon, &detail::rotate_neon, &detail::sum_squares_neon};
  return &k;
#else
  return nullptr;
#endif
}

const RotationKernels& active_kernels() noexcept {
  static const RotationKernels& chosen = []() -> const RotationKernels& {
    const char* force = std::getenv("LAPDOM_SIMD");
    if (force != nullptr && std::string_view(force) == "scalar") return scalar_kernels();
    if (const auto* k = avx2_kernels()) return *k;
    if (const auto* k = neon_kernels()) return *k;
    return scalar_kernels();
  }();
  return chosen;
}

}  // namespace lapdom::kernels
