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

#include <cstddef>
#include <vector>

#include "steerage/common.hpp"

namespace steerage {

/// Gauss-Legendre nodes and weights on [-1, 1], by Newton iteration on P_n.
/// Roots are computed for one half and mirrored so the rule is exactly
/// symmetric about 0.
inline void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  if (n < 1) throw precondition_error("gauss_legendre: order must be >= 1");
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev-like initial guess for the i-th root (descending).
    double root = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double deriv = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = root;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * root * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      deriv = n * (root * p1 - p0) / (root * root - 1.0);
      const double step = p1 / deriv;
      root -= step;
      if (std::abs(step) < 1e-15) break;
    }
    x[i] = -root;  // ascending order
    x[n - 1 - i] = root;
    const double wi = 2.0 / ((1.0 - root * root) * deriv * deriv);
    w[i] = wi;
    w[n - 1 - i] = wi;
  }
  if (n % 2 == 1) x[half - 1] = 0.0;
}

/**
 * Quadrature rule on the unit sphere: Gauss-Legendre in cos(theta) times a
 * uniform (trapezoidal) rule in phi. Weights are positive and sum to 4*pi;
 * the rule integrates polynomial integrands exactly up to the grid order,
 * which makes it spectrally accurate for smooth densities.
 */
struct QuadratureGrid {
  std::vector<Vec3> nodes;
  std::vector<double> weights;
  int n_theta = 0;  // product-grid factors (0 when not a product grid)
  int n_phi = 0;

  std::size_t size() const { return nodes.size(); }

  double total_weight() const {
    KahanSum s;
    for (double w : weights) s.add(w);
    return s.value();
  }

  /// Index of the node antipodal to node i (product grids only). Node layout
  /// and the mirrored Gauss-Legendre roots make nodes[antipode(i)] == -nodes[i]
  /// up to one ulp of the trigonometric evaluation.
  std::size_t antipode(std::size_t i) const {
    if (n_theta <= 0 || n_phi <= 0) {
      throw precondition_error("antipode: not a product grid");
    }
    const std::size_t it = i / static_cast<std::size_t>(n_phi);
    const std::size_t ip = i % static_cast<std::size_t>(n_phi);
    const std::size_t it2 = static_cast<std::size_t>(n_theta) - 1 - it;
    const std::size_t ip2 = (ip + static_cast<std::size_t>(n_phi) / 2) % n_phi;
    return it2 * static_cast<std::size_t>(n_phi) + ip2;
  }

  static QuadratureGrid product(int n_theta, int n_phi) {
    if (n_theta < 2 || n_phi < 4 || n_phi % 2 != 0) {
      throw precondition_error("QuadratureGrid::product: need n_theta >= 2 and even n_phi >= 4");
    }
    QuadratureGrid g;
    g.n_theta = n_theta;
    g.n_phi = n_phi;
    std::vector<double> c, wc;
    gauss_legendre(n_theta, c, wc);
    const double dphi = 2.0 * kPi / n_phi;
    g.nodes.reserve(static_cast<std::size_t>(n_theta) * n_phi);
    g.weights.reserve(static_cast<std::size_t>(n_theta) * n_phi);
    for (int it = 0; it < n_theta; ++it) {
      const double z = c[it];
      const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
      for (int ip = 0; ip < n_phi; ++ip) {
        const double phi = dphi * ip;
        g.nodes.emplace_back(s * std::cos(phi), s * std::sin(phi), z);
        g.weights.push_back(wc[it] * dphi);
      }
    }
    return g;
  }

  QuadratureGrid half_resolution() const {
    if (n_theta < 4 || n_phi < 8) {
      throw precondition_error("half_resolution: grid too small to halve");
    }
    return product(n_theta / 2, n_phi / 2);
  }

  /**
   * Grid aligned with `axis`, built as two polar caps (cos(theta') on [0, 1]
   * and [-1, 0] with separate Gauss-Legendre panels). No node lies on the
   * equator, so indicator responses with boundary xi . axis = 0 are smooth on
   * each panel and hemispherical integrals converge spectrally.
   */
  static QuadratureGrid hemisphere_pair(const Vec3& axis, int n_theta_half, int n_phi) {
    if (n_theta_half < 2 || n_phi < 4 || n_phi % 2 != 0) {
      throw precondition_error("QuadratureGrid::hemisphere_pair: resolution too small");
    }
    Vec3 e1, e2;
    const Vec3 a = axis.normalized();
    orthonormal_frame(a, e1, e2);
    std::vector<double> c, wc;
    gauss_legendre(n_theta_half, c, wc);
    const double dphi = 2.0 * kPi / n_phi;
    QuadratureGrid g;
    g.nodes.reserve(2 * static_cast<std::size_t>(n_theta_half) * n_phi);
    g.weights.reserve(2 * static_cast<std::size_t>(n_theta_half) * n_phi);
    for (int panel = 0; panel < 2; ++panel) {
      for (int it = 0; it < n_theta_half; ++it) {
        // Map [-1,1] to [0,1] (upper panel) or [-1,0] (lower panel).
        const double z = panel == 0 ? 0.5 * (c[it] + 1.0) : 0.5 * (c[it] - 1.0);
        const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
        for (int ip = 0; ip < n_phi; ++ip) {
          const double phi = dphi * ip;
          g.nodes.push_back(s * std::cos(phi) * e1 + s * std::sin(phi) * e2 + z * a);
          g.weights.push_back(0.5 * wc[it] * dphi);
        }
      }
    }
    return g;
  }
};

/// Deterministic low-discrepancy direction set (Fibonacci lattice on the sphere).
inline std::vector<Vec3> fibonacci_directions(std::size_t n) {
  std::vector<Vec3> dirs;
  dirs.reserve(n);
  const double golden = kPi * (3.0 - std::sqrt(5.0));
  for (std::size_t i = 0; i < n; ++i) {
    const double z = 1.0 - (2.0 * i + 1.0) / static_cast<double>(n);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden * static_cast<double>(i);
    dirs.emplace_back(r * std::cos(phi), r * std::sin(phi), z);
  }
  return dirs;
}

}  // namespace steerage
