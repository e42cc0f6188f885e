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

// NEON kernels (aarch64 only; NEON is mandatory there, so no runtime probe).

#include <arm_neon.h>

#include <cstddef>

#include "lapdom/kernels/rotation.hpp"

namespace lapdom::kernels {

namespace detail {

void rotate_neon(std::span<double> x, std::span<double> y, double c, double s) {
  const std::size_t n = x.size();
  double* px = x.data();
  double* py = y.data();
  const float64x2_t vc = vdupq_n_f64(c);
  const float64x2_t vs = vdupq_n_f64(s);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t xi = vld1q_f64(px + i);
    const float64x2_t yi = vld1q_f64(py + i);
    vst1q_f64(px + i, vsubq_f64(vmulq_f64(vc, xi), vmulq_f64(vs, yi)));
    vst1q_f64(py + i, vaddq_f64(vmulq_f64(vs, xi), vmulq_f64(vc, yi)));
  }
  for (; i < n; ++i) {
    const double xi = px[i];
    const double yi = py[i];
    px[i] = c * xi - s * yi;
    py[i] = s * xi + c * yi;
  }
}

double sum_squares_neon(std::span<const double> x) {
  const std::size_t n = x.size();
  const double* p = x.data();
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t a = vld1q_f64(p + i);
    acc = vaddq_f64(acc, vmulq_f64(a, a));
  }
  double total = vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
  for (; i < n; ++i) total += p[i] * p[i];
  return total;
}

}  // namespace detail

}  // namespace lapdom::kernels
