// Copyright 2026 The Steerage Authors
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
#include <limits>
#include <stdexcept>

#include "steerage/common.hpp"

namespace steerage {

/**
 * Complete elliptic integral of the second kind,
 *
 *     E(m) = integral_0^{pi/2} sqrt(1 - m sin^2 t) dt,   0 <= m <= 1,
 *
 * in the parameter convention m = e^2 (e the eccentricity).
 *
 * Evaluated with the arithmetic-geometric mean iteration
 *   a_0 = 1, b_0 = sqrt(1-m), c_0 = sqrt(m),
 *   a_{k+1} = (a_k+b_k)/2, b_{k+1} = sqrt(a_k b_k), c_{k+1} = (a_k-b_k)/2,
 *   E = (pi / (2 a_N)) * (1 - sum_k 2^{k-1} c_k^2),
 * which converges quadratically; the result carries full double precision.
 */
inline double elliptic_e(double m) {
  if (!(m >= 0.0 && m <= 1.0)) {
    throw std::domain_error("elliptic_e: parameter m must lie in [0, 1]");
  }
  if (m == 0.0) return kPi / 2.0;
  if (m == 1.0) return 1.0;

  double a = 1.0;
  double b = std::sqrt(1.0 - m);
  double c = std::sqrt(m);
  double sum = 0.5 * c * c;  // 2^{-1} c_0^2
  double pow2 = 0.5;
  for (int k = 0; k < 64; ++k) {
    const double a_next = 0.5 * (a + b);
    const double b_next = std::sqrt(a * b);
    c = 0.5 * (a - b);
    a = a_next;
    b = b_next;
    pow2 *= 2.0;
    sum += pow2 * c * c;
    if (std::abs(c) <= std::numeric_limits<double>::epsilon() * a) break;
  }
  return (kPi / (2.0 * a)) * (1.0 - sum);
}

}  // namespace steerage
