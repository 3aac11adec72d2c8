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

#include <Eigen/SVD>
#include <span>
#include <vector>

#include "steerage/pauli.hpp"

namespace steerage {

enum class Steering { AliceToBob, BobToAlice };

/**
 * Steering figure of a two-qubit state: the image of the unit measurement
 * sphere under x |-> shape * x, translated by the steered side's half Bloch
 * vector. Depending on the rank of the shape map this is a dot, a segment,
 * an ellipse, or an ellipsoid surface; `dimension` counts the singular values
 * above the rank tolerance (relative to max(s1, 1)).
 */
struct SteeringEllipsoid {
  Vec3 center = Vec3::Zero();
  Mat3 shape = Mat3::Zero();
  Mat3 axes = Mat3::Identity();        // left singular vectors (principal directions)
  Mat3 input_axes = Mat3::Identity();  // right singular vectors (measurement preimages)
  Vec3 semi_axes = Vec3::Zero();       // singular values, descending
  int dimension = 0;
  bool borderline = false;  // a rank call fell inside the guard band
};

inline SteeringEllipsoid make_ellipsoid(const Vec3& center, const Mat3& shape) {
  Eigen::JacobiSVD<Mat3> svd(shape, Eigen::ComputeFullU | Eigen::ComputeFullV);
  SteeringEllipsoid e;
  e.center = center;
  e.shape = shape;
  e.axes = svd.matrixU();
  e.input_axes = svd.matrixV();
  e.semi_axes = svd.singularValues();
  const double base = std::max(e.semi_axes(0), 1.0);
  for (int i = 0; i < 3; ++i) {
    const double s = e.semi_axes(i);
    if (s >= kRankTol * base) ++e.dimension;
    if (s >= kRankTol * base && s < kBorderlineTol * base) e.borderline = true;
  }
  return e;
}

/// Alice steering Bob: center b/2, shape T^t/2. Bob steering Alice: center
/// a/2, shape T/2.
inline SteeringEllipsoid ellipsoid_of(const CorrelationMatrix& g, Steering direction) {
  if (direction == Steering::AliceToBob) {
    return make_ellipsoid(0.5 * g.b, 0.5 * g.T.transpose());
  }
  return make_ellipsoid(0.5 * g.a, 0.5 * g.T);
}

/// Support function of the centered figure: max over |x| = 1 of n . (shape x),
/// i.e. |shape^t n|. The center is ignored on purpose: the quantities built on
/// top of this are translation independent.
inline double support_value(const SteeringEllipsoid& e, const Vec3& n) {
  require_unit(n, "support direction");
  return (e.shape.transpose() * n).norm();
}

/**
 * Outer normal of the figure at the surface point shape * x. For a 2D figure
 * the normal is taken within the ellipse's plane (the pseudo-inverse below is
 * restricted to the non-degenerate singular directions). Requires dimension
 * >= 2; segment and dot figures have no well-defined normal field.
 */
inline Vec3 normal_at(const SteeringEllipsoid& e, const Vec3& x) {
  if (e.dimension < 2) {
    throw unsupported_dimension_error(
        "normal_at: normals need a figure of dimension >= 2 (got " +
        std::to_string(e.dimension) + ")");
  }
  Vec3 w = Vec3::Zero();
  for (int i = 0; i < e.dimension; ++i) {
    w += (e.input_axes.col(i).dot(x) / e.semi_axes(i)) * e.axes.col(i);
  }
  const double norm = w.norm();
  if (norm < 1e-12) {
    throw precondition_error("normal_at: direction is orthogonal to the figure");
  }
  return w / norm;
}

struct AssemblageSample {
  Vec3 direction;
  ConditionedState plus;
  ConditionedState minus;
};

/// Conditioned-state pairs for a list of measurement directions. The shrinked
/// vectors land on the surface of ellipsoid_of(g, direction).
inline std::vector<AssemblageSample> sample_assemblage(const CorrelationMatrix& g,
                                                       std::span<const Vec3> directions,
                                                       Steering direction = Steering::AliceToBob) {
  const CorrelationMatrix eff = direction == Steering::AliceToBob ? g : swap_parties(g);
  std::vector<AssemblageSample> out;
  out.reserve(directions.size());
  for (const Vec3& x : directions) {
    out.push_back({x, conditioned_state(eff, x, +1), conditioned_state(eff, x, -1)});
  }
  return out;
}

}  // namespace steerage
