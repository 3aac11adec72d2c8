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

// Test-only oracles, written independently of the library code paths they
// check: plain-array Pauli algebra, a Romberg integrator, and seeded random
// generators for states, directions and rotations.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include "steerage/common.hpp"

namespace oracles {

using C = std::complex<double>;
using M2 = std::array<std::array<C, 2>, 2>;
using M4 = std::array<std::array<C, 4>, 4>;

inline M2 pauli2(int u) {
  switch (u) {
    case 1: return {{{C(0), C(1)}, {C(1), C(0)}}};
    case 2: return {{{C(0), C(0, -1)}, {C(0, 1), C(0)}}};
    case 3: return {{{C(1), C(0)}, {C(0), C(-1)}}};
    default: return {{{C(1), C(0)}, {C(0), C(1)}}};
  }
}

inline M4 kron4(const M2& a, const M2& b) {
  M4 k{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) k[2 * i + r][2 * j + c] = a[i][j] * b[r][c];
  return k;
}

/// Tr[rho * (sigma_u x sigma_v)] by explicit loops; the brute-force trace
/// oracle for the Pauli coefficients.
inline double pauli_coeff(const steerage::Mat4c& rho, int u, int v) {
  const M4 s = kron4(pauli2(u), pauli2(v));
  C tr(0.0, 0.0);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) tr += rho(r, c) * s[c][r];
  return tr.real();
}

/// Eigenvalues of a Bell-diagonal state with correlations (t1, t2, t3).
inline std::array<double, 4> bell_diagonal_eigenvalues(double t1, double t2, double t3) {
  return {0.25 * (1.0 - t1 - t2 - t3), 0.25 * (1.0 - t1 + t2 + t3),
          0.25 * (1.0 + t1 - t2 + t3), 0.25 * (1.0 + t1 + t2 - t3)};
}

/// Romberg integration on [a, b]; independent of the library's quadrature.
inline double romberg(const std::function<double(double)>& f, double a, double b,
                      int max_level = 22, double tol = 1e-14) {
  std::vector<double> prev, curr;
  double h = b - a;
  prev.push_back(0.5 * h * (f(a) + f(b)));
  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    double sum = 0.0;
    const long n = 1L << (level - 1);
    for (long i = 0; i < n; ++i) sum += f(a + (2.0 * i + 1.0) * h);
    curr.assign(level + 1, 0.0);
    curr[0] = 0.5 * prev[0] + h * sum;
    double pow4 = 1.0;
    for (int k = 1; k <= level; ++k) {
      pow4 *= 4.0;
      curr[k] = (pow4 * curr[k - 1] - prev[k - 1]) / (pow4 - 1.0);
    }
    if (level > 3 && std::abs(curr[level] - prev[level - 1]) < tol) return curr[level];
    prev = curr;
  }
  return prev.back();
}

struct Rng {
  std::mt19937_64 engine;

  explicit Rng(std::uint64_t seed) : engine(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(engine);
  }

  steerage::Vec3 unit_vec() {
    const double z = uniform(-1.0, 1.0);
    const double phi = uniform(0.0, 2.0 * steerage::kPi);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return {r * std::cos(phi), r * std::sin(phi), z};
  }

  steerage::Mat3 rotation() {
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::Quaterniond q(normal(engine), normal(engine), normal(engine), normal(engine));
    q.normalize();
    return q.toRotationMatrix();
  }

  /// Random mixture of random pure two-qubit states: Hermitian, unit trace,
  /// positive by construction.
  steerage::Mat4c density_matrix(int n_terms = 6) {
    std::normal_distribution<double> normal(0.0, 1.0);
    steerage::Mat4c rho = steerage::Mat4c::Zero();
    std::array<double, 8> w{};
    double wsum = 0.0;
    for (int k = 0; k < n_terms; ++k) {
      w[k] = uniform(0.05, 1.0);
      wsum += w[k];
    }
    for (int k = 0; k < n_terms; ++k) {
      Eigen::Vector4cd psi;
      for (int i = 0; i < 4; ++i) psi(i) = C(normal(engine), normal(engine));
      psi.normalize();
      rho += (w[k] / wsum) * (psi * psi.adjoint());
    }
    return 0.5 * (rho + rho.adjoint().eval());
  }
};

}  // namespace oracles
