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

#include <cstdint>
#include <limits>
#include <random>
#include <string>

#include "steerage/ellipsoid.hpp"
#include "steerage/elliptic.hpp"
#include "steerage/quadrature.hpp"

namespace steerage {

enum class QuantityMethod { Analytic1D, Elliptic2D, Quadrature3D, MonteCarlo3D };

inline const char* to_string(QuantityMethod m) {
  switch (m) {
    case QuantityMethod::Analytic1D: return "analytic-1d";
    case QuantityMethod::Elliptic2D: return "elliptic-2d";
    case QuantityMethod::Quadrature3D: return "quadrature-3d";
    case QuantityMethod::MonteCarlo3D: return "monte-carlo-3d";
  }
  return "unknown";
}

/**
 * Optimal geometric steering weight of a centered figure, normalized so that
 * the value 1 marks the boundary between figures that do and do not admit a
 * unit-weight surface model. By dimension d of the figure the value is
 *   d = 1 : the segment length,
 *   d = 2 : half the circumference of the ellipse,
 *   d = 3 : the support-function integral over the sphere divided by pi.
 */
struct SteeringQuantity {
  double value = 0.0;
  int dimension = 0;
  QuantityMethod method = QuantityMethod::Analytic1D;
  double est_error = 0.0;
  std::string note;  // e.g. reordered arguments, degenerate-dispatch cross-checks
};

/// d = 1: the value is the segment length L = 2 * s1 itself.
inline SteeringQuantity sg_1d(double length) {
  if (length < 0.0) throw std::domain_error("sg_1d: negative length");
  return {length, 1, QuantityMethod::Analytic1D, 0.0, {}};
}

/// d = 2: half the ellipse circumference, 2 a E(1 - b^2/a^2) for semi-axes
/// a >= b. Continuously matches sg_1d(2a) as b -> 0 and pi*a on the circle.
inline SteeringQuantity sg_2d(double a, double b) {
  SteeringQuantity q;
  if (a < b) {
    std::swap(a, b);
    q.note = "semi-axes reordered (a < b)";
  }
  if (b < 0.0) throw std::domain_error("sg_2d: negative semi-axis");
  if (a <= 0.0) throw std::domain_error("sg_2d: major semi-axis must be positive");
  const double ratio = b / a;
  q.value = 2.0 * a * elliptic_e(1.0 - ratio * ratio);
  q.dimension = 2;
  q.method = QuantityMethod::Elliptic2D;
  q.est_error = 8.0 * std::numeric_limits<double>::epsilon() * std::max(q.value, 1.0);
  return q;
}

namespace detail {

inline double support_integral(const Mat3& shape, const QuadratureGrid& grid) {
  KahanSum s;
  const Mat3 mt = shape.transpose();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    s.add(grid.weights[i] * (mt * grid.nodes[i]).norm());
  }
  return s.value();
}

}  // namespace detail

/**
 * d = 3: (1/pi) * integral of the support function over the unit sphere,
 * evaluated on the given product grid. The error estimate is the difference
 * against the half-resolution grid (plus a rounding floor), which is sharp
 * for the smooth full-rank integrand.
 */
inline SteeringQuantity sg_3d(const SteeringEllipsoid& e, const QuadratureGrid& grid) {
  if (e.semi_axes(0) <= 0.0) {
    return {0.0, 0, QuantityMethod::Quadrature3D, 0.0, {}};
  }
  if (e.dimension < 3) {
    throw unsupported_dimension_error("sg_3d: figure has dimension " +
                                      std::to_string(e.dimension) +
                                      "; dispatch to sg_1d/sg_2d instead");
  }
  const double full = detail::support_integral(e.shape, grid) / kPi;
  const double half = detail::support_integral(e.shape, grid.half_resolution()) / kPi;
  SteeringQuantity q;
  q.value = full;
  q.dimension = 3;
  q.method = QuantityMethod::Quadrature3D;
  q.est_error = std::abs(full - half) + 8.0 * std::numeric_limits<double>::epsilon() * std::abs(full);
  return q;
}

/// Monte-Carlo route for the d = 3 integral: 4 * E[|shape^t n|] over uniform
/// directions. est_error is one standard error of the estimate.
inline SteeringQuantity sg_3d_monte_carlo(const SteeringEllipsoid& e, std::size_t samples,
                                          std::uint64_t seed) {
  if (samples < 2) throw precondition_error("sg_3d_monte_carlo: need at least 2 samples");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const Mat3 mt = e.shape.transpose();
  double mean = 0.0;
  double m2 = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const double z = 2.0 * unif(rng) - 1.0;
    const double phi = 2.0 * kPi * unif(rng);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const Vec3 n(r * std::cos(phi), r * std::sin(phi), z);
    const double v = (mt * n).norm();
    const double delta = v - mean;
    mean += delta / static_cast<double>(i + 1);
    m2 += delta * (v - mean);
  }
  const double variance = m2 / static_cast<double>(samples - 1);
  SteeringQuantity q;
  q.value = 4.0 * mean;
  q.dimension = 3;
  q.method = QuantityMethod::MonteCarlo3D;
  q.est_error = 4.0 * std::sqrt(variance / static_cast<double>(samples));
  return q;
}

/**
 * Quantity for the centered figure of the basic (Bell-diagonal) state of g:
 * classifies the dimension from the singular values of T/2 and dispatches to
 * the per-dimension formula. Borderline rank calls are cross-checked against
 * the next-lower-dimension formula and the larger error estimate is kept.
 */
inline SteeringQuantity steering_quantity(const CorrelationMatrix& g, Steering direction,
                                          const QuadratureGrid& grid) {
  const SteeringEllipsoid e = ellipsoid_of(basic_state(g).state, direction);
  const Vec3& s = e.semi_axes;
  switch (e.dimension) {
    case 0:
      return {0.0, 0, QuantityMethod::Analytic1D, 0.0, {}};
    case 1:
      return sg_1d(2.0 * s(0));
    case 2: {
      SteeringQuantity q = sg_2d(s(0), s(1));
      if (e.borderline) {
        const SteeringQuantity lower = sg_1d(2.0 * s(0));
        q.est_error = std::max(q.est_error, std::abs(q.value - lower.value));
        q.note = "borderline rank; cross-checked against 1d";
      }
      return q;
    }
    default: {
      SteeringQuantity q = sg_3d(e, grid);
      if (e.borderline) {
        const SteeringQuantity lower = sg_2d(s(0), s(1));
        q.est_error = std::max(q.est_error, std::abs(q.value - lower.value));
        q.note = "borderline rank; cross-checked against 2d";
      }
      return q;
    }
  }
}

inline SteeringQuantity steering_quantity(const CorrelationMatrix& g,
                                          Steering direction = Steering::AliceToBob) {
  return steering_quantity(g, direction, QuadratureGrid::product(128, 256));
}

/// Diagnostic ratio value / (s1 + s2 + s3). Emits data only; no structural
/// claims are attached to it.
inline double shape_coefficient(const SteeringEllipsoid& e, const QuadratureGrid& grid) {
  const double sum = e.semi_axes.sum();
  if (e.dimension < 1 || sum <= 0.0) {
    throw std::domain_error("shape_coefficient: needs a figure of dimension >= 1");
  }
  SteeringQuantity q;
  switch (e.dimension) {
    case 1: q = sg_1d(2.0 * e.semi_axes(0)); break;
    case 2: q = sg_2d(e.semi_axes(0), e.semi_axes(1)); break;
    default: q = sg_3d(e, grid); break;
  }
  return q.value / sum;
}

inline double shape_coefficient(const SteeringEllipsoid& e) {
  return shape_coefficient(e, QuadratureGrid::product(128, 256));
}

}  // namespace steerage
