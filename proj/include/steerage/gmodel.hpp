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

#include <functional>
#include <utility>
#include <vector>

#include "steerage/ellipsoid.hpp"
#include "steerage/quadrature.hpp"

namespace steerage {

/**
 * Response rule p(outcome | measurement x, hidden direction xi) of a surface
 * model. Every variant satisfies p(+) + p(-) = 1 exactly for each (x, xi):
 * indicator variants give the closed hemisphere (xi . n >= 0) to the "+"
 * outcome and the open complement to "-".
 */
struct ResponseRule {
  enum class Kind { Hemisphere3D, Planar2D, Segment1D, WernerRadial };

  Kind kind = Kind::WernerRadial;
  Mat3 shape = Mat3::Zero();    // Hemisphere3D: shape map of the target figure
  Vec3 axis = Vec3::UnitZ();    // Segment1D: segment direction
  double sigma1 = 0.0;          // Planar2D: in-plane semi-axes (ellipse in the
  double sigma2 = 0.0;          //           xy-plane, axes along e1 / e2)

  /// Outer normal of the target figure for the given measurement/outcome
  /// (hemispherical variants only).
  Vec3 outcome_normal(const Vec3& x, int sign) const {
    const double s = static_cast<double>(sign);
    if (kind == Kind::WernerRadial) {
      // Shape proportional to -identity: the surface point for outcome + is
      // along -x, and the sphere normal is radial.
      return (-s * x).normalized();
    }
    if (kind == Kind::Hemisphere3D) {
      const Vec3 w = shape.transpose().fullPivLu().solve(s * x);
      const double norm = w.norm();
      if (norm < 1e-12) {
        throw precondition_error("outcome_normal: degenerate shape/measurement pair");
      }
      return w / norm;
    }
    throw unsupported_form_error("outcome_normal: response has no 3D normal field");
  }

  double prob(const Vec3& x, int sign, const Vec3& xi) const {
    switch (kind) {
      case Kind::WernerRadial:
      case Kind::Hemisphere3D: {
        const double p_plus = xi.dot(outcome_normal(x, +1)) >= 0.0 ? 1.0 : 0.0;
        return sign > 0 ? p_plus : 1.0 - p_plus;
      }
      case Kind::Planar2D: {
        if (std::abs(xi.z()) > 1e-9) return 0.5;  // off the great circle
        Vec3 h(x.x() / sigma1, x.y() / sigma2, 0.0);
        const double hn = h.norm();
        if (hn < 1e-12) return 0.5;  // measurement orthogonal to the plane
        const double p_plus = xi.dot(h / hn) >= 0.0 ? 1.0 : 0.0;
        return sign > 0 ? p_plus : 1.0 - p_plus;
      }
      case Kind::Segment1D: {
        const double c = x.dot(axis) * xi.dot(axis);
        return 0.5 * (1.0 + static_cast<double>(sign) * c);
      }
    }
    return 0.5;
  }
};

struct SurfaceAtom {
  Vec3 xi;
  double weight;
};

/**
 * Geometric surface model: a nonnegative weight density q on the unit sphere
 * (sampled on a quadrature grid, with the continuum form kept alongside),
 * optional exact point masses for delta-supported constructions, a center
 * atom, and a response rule. The total weight S = integral of q + atom mass +
 * center mass is the model's steering quantity; S <= 1 is the existence
 * region for a physical local model.
 */
struct GModel {
  QuadratureGrid grid;                            // empty for atom-only models
  std::vector<double> density;                    // q at grid nodes
  std::function<double(const Vec3&)> density_fn;  // continuum density
  std::vector<SurfaceAtom> atoms;
  double center_atom = 0.0;
  ResponseRule response;

  double quantity() const {
    KahanSum s;
    for (std::size_t i = 0; i < density.size(); ++i) s.add(grid.weights[i] * density[i]);
    for (const auto& a : atoms) s.add(a.weight);
    s.add(center_atom);
    return s.value();
  }

  /// New model with q(xi) + add(xi); atoms and response are kept. The summed
  /// density must stay nonnegative at the nodes.
  GModel with_added_density(const std::function<double(const Vec3&)>& add) const {
    GModel out = *this;
    double min_q = 0.0;
    for (std::size_t i = 0; i < out.density.size(); ++i) {
      out.density[i] += add(grid.nodes[i]);
      min_q = std::min(min_q, out.density[i]);
    }
    if (min_q < -1e-12) {
      throw std::domain_error("with_added_density: density becomes negative");
    }
    const auto base = density_fn;
    out.density_fn = [base, add](const Vec3& xi) { return base(xi) + add(xi); };
    return out;
  }
};

namespace detail {

inline void check_nonnegative(const std::vector<double>& q) {
  for (double v : q) {
    if (v < -1e-12) throw std::domain_error("g-model density is negative at a node");
  }
}

inline GModel grid_model(const QuadratureGrid& grid, std::function<double(const Vec3&)> fn,
                         ResponseRule response) {
  GModel m;
  m.grid = grid;
  m.density.reserve(grid.size());
  for (const Vec3& xi : grid.nodes) m.density.push_back(fn(xi));
  check_nonnegative(m.density);
  m.density_fn = std::move(fn);
  m.response = response;
  return m;
}

}  // namespace detail

/// Uniform model q = p / (2 pi) with the radial sphere response; total weight
/// 2p. Reconstructs the centered sphere of radius p/2.
inline GModel gmodel_werner(double p, const QuadratureGrid& grid) {
  if (p < 0.0 || p > 1.0) throw std::domain_error("gmodel_werner: p must lie in [0, 1]");
  ResponseRule r;
  r.kind = ResponseRule::Kind::WernerRadial;
  return detail::grid_model(grid, [p](const Vec3&) { return p / (2.0 * kPi); }, r);
}

/// Two point masses of weight L/2 at +-axis with the linear response
/// p(+-) = (1 +- (x.axis)(xi.axis)) / 2. Total weight L; reconstructs the
/// centered segment of length L along the axis.
inline GModel gmodel_1d(double length, const Vec3& axis) {
  if (length < 0.0 || length > 1.0) throw std::domain_error("gmodel_1d: length must lie in [0, 1]");
  require_unit(axis, "segment axis");
  GModel m;
  m.atoms = {{axis, 0.5 * length}, {-axis, 0.5 * length}};
  m.response.kind = ResponseRule::Kind::Segment1D;
  m.response.axis = axis;
  return m;
}

/**
 * Boundary model of the centered ellipse with semi-axes s1 >= s2 > 0 in the
 * xy-plane. The density lives on the unit circle of that plane: the boundary
 * point P(t) = (s1 cos t, s2 sin t) contributes mass at its tangent direction,
 * with line density (per radian of normal angle)
 *
 *     q = |P'(t)|^3 / (2 s1 s2),
 *
 * i.e. half the arc length per unit turn of the boundary normal. Atoms store
 * the midpoint discretization of t, so the total weight equals half the
 * circumference to spectral accuracy.
 */
inline GModel gmodel_2d(double sigma1, double sigma2, int resolution = 4096) {
  if (sigma2 <= 0.0) {
    throw std::domain_error("gmodel_2d: sigma2 must be positive; use gmodel_1d for segments");
  }
  if (sigma1 < sigma2) throw std::domain_error("gmodel_2d: requires sigma1 >= sigma2");
  if (sigma1 > 0.5 + 1e-12) {
    throw std::domain_error("gmodel_2d: semi-axes of steering ellipses cannot exceed 1/2");
  }
  if (resolution < 64) throw precondition_error("gmodel_2d: resolution too small");
  GModel m;
  const double dt = 2.0 * kPi / resolution;
  m.atoms.reserve(resolution);
  for (int i = 0; i < resolution; ++i) {
    const double t = (i + 0.5) * dt;
    const double st = std::sin(t);
    const double ct = std::cos(t);
    const double speed = std::hypot(sigma1 * st, sigma2 * ct);
    const Vec3 tangent(-sigma1 * st / speed, sigma2 * ct / speed, 0.0);
    m.atoms.push_back({tangent, 0.5 * speed * dt});
  }
  m.response.kind = ResponseRule::Kind::Planar2D;
  m.response.sigma1 = sigma1;
  m.response.sigma2 = sigma2;
  return m;
}

/**
 * Explicit model for the steered side of the phi family (steering side Bob):
 * q(xi) = (1 + 3p cos beta') / (4 pi) with beta' the angle between xi and u,
 * radial sphere response. Nonnegative and of total weight exactly 1 for
 * 0 < p <= 1/5; reconstructs the radius-1/4 sphere translated by (p/2) u.
 */
inline GModel gmodel_phi_b_to_a(double p, const Vec3& u, const QuadratureGrid& grid) {
  if (!(p > 0.0 && p <= 0.2 + 1e-15)) {
    throw std::domain_error("gmodel_phi_b_to_a: p must lie in (0, 1/5]");
  }
  require_unit(u, "phi Bloch vector");
  const Vec3 ux = u.normalized();
  ResponseRule r;
  r.kind = ResponseRule::Kind::WernerRadial;
  return detail::grid_model(
      grid, [p, ux](const Vec3& xi) { return (1.0 + 3.0 * p * xi.dot(ux)) / kFourPi; }, r);
}

/// Candidate model for the opposite direction: q(xi) = (1 + 2p cos a') / (4 pi)
/// around u (the Bloch vector of the orthogonal state). Reproduces the
/// marginals (1 + p cos a) / 2 but translates the sphere by (p/3) u only.
inline GModel candidate_q_y(double p, const Vec3& u, const QuadratureGrid& grid) {
  if (!(p > 0.0 && p <= 0.2 + 1e-15)) {
    throw std::domain_error("candidate_q_y: p must lie in (0, 1/5]");
  }
  require_unit(u, "phi Bloch vector");
  const Vec3 uy = u.normalized();
  ResponseRule r;
  r.kind = ResponseRule::Kind::WernerRadial;
  return detail::grid_model(
      grid, [p, uy](const Vec3& xi) { return (1.0 + 2.0 * p * xi.dot(uy)) / kFourPi; }, r);
}

struct Reconstruction {
  double prob_plus = 0.0;  // normalized outcome probabilities
  double prob_minus = 0.0;
  double raw_plus = 0.0;   // unnormalized masses
  double raw_minus = 0.0;
  Vec3 s_plus = Vec3::Zero();
  Vec3 s_minus = Vec3::Zero();
};

namespace detail {

// Overlap of the arc [ta, ta+pi) with the cell [lo, hi), everything mod 2 pi.
inline double arc_cell_overlap(double ta, double lo, double hi) {
  const double two_pi = 2.0 * kPi;
  double a = std::fmod(lo - ta, two_pi);
  if (a < 0.0) a += two_pi;
  const double b = a + (hi - lo);
  double ov = std::max(0.0, std::min(b, kPi) - a);
  if (b > two_pi) ov += std::max(0.0, std::min(b - two_pi, kPi));
  return ov;
}

struct Accumulator {
  KahanSum raw;
  KahanSum sx, sy, sz;
  void add(double w, const Vec3& xi) {
    raw.add(w);
    sx.add(w * xi.x());
    sy.add(w * xi.y());
    sz.add(w * xi.z());
  }
  Vec3 vec() const { return {sx.value(), sy.value(), sz.value()}; }
};

}  // namespace detail

/**
 * Outcome probabilities and shrinked vectors generated by the model for one
 * measurement direction.
 *
 * Indicator responses integrate a smooth density over a half space, so the
 * grid part is evaluated on a quadrature grid aligned with the outcome normal
 * (no node straddles the cut); the model's own grid samples still define its
 * total weight. Boundary cells of the 2D circle model are split by their arc
 * coverage for the same reason. Probabilities are normalized by the total
 * reconstructed mass, which keeps prob+ + prob- = 1 exact.
 */
inline Reconstruction reconstruct(const GModel& m, const Vec3& x, int aligned_theta_half = 64,
                                  int aligned_phi = 128) {
  require_unit(x, "measurement direction");
  if (m.quantity() <= 0.0) {
    throw undefined_probability_error("reconstruct: empty model (total weight 0)");
  }

  detail::Accumulator plus, minus;

  if (!m.atoms.empty()) {
    if (m.response.kind == ResponseRule::Kind::Planar2D) {
      // Atoms discretize the boundary parameter uniformly; recover the cells.
      const std::size_t n = m.atoms.size();
      const double dt = 2.0 * kPi / static_cast<double>(n);
      Vec3 h(x.x() / m.response.sigma1, x.y() / m.response.sigma2, 0.0);
      const double hn = h.norm();
      if (hn < 1e-12) {
        for (const auto& a : m.atoms) {
          plus.add(0.5 * a.weight, a.xi);
          minus.add(0.5 * a.weight, a.xi);
        }
      } else {
        const Vec3 nrm = h / hn;
        // Cut where the boundary tangent is orthogonal to the normal.
        double ta = std::atan2(m.response.sigma2 * nrm.y(), m.response.sigma1 * nrm.x());
        const double tm = ta + 0.5 * kPi;
        const double orient =
            -m.response.sigma1 * std::sin(tm) * nrm.x() + m.response.sigma2 * std::cos(tm) * nrm.y();
        if (orient < 0.0) ta += kPi;
        for (std::size_t i = 0; i < n; ++i) {
          const double frac =
              detail::arc_cell_overlap(ta, static_cast<double>(i) * dt,
                                       static_cast<double>(i + 1) * dt) / dt;
          plus.add(m.atoms[i].weight * frac, m.atoms[i].xi);
          minus.add(m.atoms[i].weight * (1.0 - frac), m.atoms[i].xi);
        }
      }
    } else {
      for (const auto& a : m.atoms) {
        plus.add(a.weight * m.response.prob(x, +1, a.xi), a.xi);
        minus.add(a.weight * m.response.prob(x, -1, a.xi), a.xi);
      }
    }
  }

  if (!m.density.empty()) {
    const bool hemispherical = m.response.kind == ResponseRule::Kind::WernerRadial ||
                               m.response.kind == ResponseRule::Kind::Hemisphere3D;
    if (hemispherical && m.density_fn) {
      const Vec3 n_plus = m.response.outcome_normal(x, +1);
      const QuadratureGrid aligned =
          QuadratureGrid::hemisphere_pair(n_plus, aligned_theta_half, aligned_phi);
      for (std::size_t i = 0; i < aligned.size(); ++i) {
        const Vec3& xi = aligned.nodes[i];
        const double wq = aligned.weights[i] * m.density_fn(xi);
        const double p_plus = m.response.prob(x, +1, xi);
        plus.add(wq * p_plus, xi);
        minus.add(wq * (1.0 - p_plus), xi);
      }
    } else {
      for (std::size_t i = 0; i < m.grid.size(); ++i) {
        const Vec3& xi = m.grid.nodes[i];
        const double wq = m.grid.weights[i] * m.density[i];
        const double p_plus = m.response.prob(x, +1, xi);
        plus.add(wq * p_plus, xi);
        minus.add(wq * (1.0 - p_plus), xi);
      }
    }
  }

  Reconstruction out;
  out.raw_plus = plus.raw.value() + 0.5 * m.center_atom;
  out.raw_minus = minus.raw.value() + 0.5 * m.center_atom;
  out.s_plus = plus.vec();
  out.s_minus = minus.vec();
  const double total = out.raw_plus + out.raw_minus;
  if (total <= 0.0) {
    throw undefined_probability_error("reconstruct: vanishing reconstructed mass");
  }
  out.prob_plus = out.raw_plus / total;
  out.prob_minus = out.raw_minus / total;
  return out;
}

enum class EvenPolicy {
  RequireIsotropic,  // reject densities whose even part is not constant
  IgnoreEven,        // translation from the odd part regardless of the even part
};

/**
 * Translation vector generated by a hemispherical-response model: the integral
 * of the odd part (q(xi) - q(-xi)) / 2 times xi over the hemisphere aligned
 * with the odd part's axis, computed as half the full-sphere first moment of
 * q. Only the odd part contributes to the moment, so under IgnoreEven the
 * value is insensitive to even perturbations by construction.
 *
 * The strict default refuses densities with a non-constant even part: for
 * those the reconstructed figure is no longer a pure translate and the value
 * would lose its meaning as "the shift of the figure".
 */
inline Vec3 translation_of(const GModel& m, EvenPolicy policy = EvenPolicy::RequireIsotropic) {
  if (m.response.kind != ResponseRule::Kind::WernerRadial &&
      m.response.kind != ResponseRule::Kind::Hemisphere3D) {
    throw unsupported_form_error("translation_of: response has no hemispherical form");
  }
  if (m.density.empty()) {
    throw unsupported_form_error("translation_of: model carries no surface density");
  }
  if (policy == EvenPolicy::RequireIsotropic) {
    KahanSum mass;
    for (std::size_t i = 0; i < m.density.size(); ++i) mass.add(m.grid.weights[i] * m.density[i]);
    const double mean = mass.value() / kFourPi;
    double max_residual = 0.0;
    for (std::size_t i = 0; i < m.density.size(); ++i) {
      const double even = 0.5 * (m.density[i] + m.density[m.grid.antipode(i)]);
      max_residual = std::max(max_residual, std::abs(even - mean));
    }
    if (max_residual > 1e-8) {
      throw unsupported_form_error(
          "translation_of: density has even anisotropy (residual " +
          std::to_string(max_residual) + "); translation is defined for isotropic + odd form");
    }
  }
  detail::Accumulator moment;
  for (std::size_t i = 0; i < m.density.size(); ++i) {
    moment.add(m.grid.weights[i] * m.density[i], m.grid.nodes[i]);
  }
  return 0.5 * moment.vec();
}

}  // namespace steerage
