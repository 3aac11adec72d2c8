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

#include "steerage/circle_fourier.hpp"
#include "steerage/quantity.hpp"

namespace steerage {

enum class Verdict { Steerable, Unsteerable, Unknown };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Steerable: return "steerable";
    case Verdict::Unsteerable: return "unsteerable";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

/// Per-direction evidence for the phi-family demonstration.
struct DirectionAssessment {
  double sphere_radius = 0.25;
  double model_quantity = 0.0;       // total weight of the candidate model
  Vec3 required_translation = Vec3::Zero();  // center of the state's figure
  Vec3 achieved_translation = Vec3::Zero();  // translation the model generates
  double translation_mismatch = 0.0;
  double marginal_residual = 0.0;    // max |model - state| outcome probability
  Verdict verdict = Verdict::Unknown;
};

/// Outcome of the great-circle deconvolution: the marginals pin down the
/// degree-1 odd part of any admissible density, and with it the translation.
struct UniquenessCertificate {
  double recovered_cos_coefficient = 0.0;
  Vec3 implied_translation = Vec3::Zero();
  double forward_residual = 0.0;          // |marginal(recovered) - marginal| inf-norm
  std::vector<int> nullspace_harmonics;   // odd harmonics the marginals cannot see
  bool translation_determined = false;
};

struct AsymmetryReport {
  double p = 0.0;
  Vec3 u_x = Vec3::UnitZ();  // Bloch vector of the attached pure state
  Vec3 u_y = -Vec3::UnitZ();
  DirectionAssessment bob_to_alice;
  DirectionAssessment alice_to_bob;
  UniquenessCertificate certificate;
  bool werner_limit = false;  // translations degenerate to 0 (p -> 0 limit)
};

namespace detail {

inline double max_marginal_residual(const GModel& model, const CorrelationMatrix& steered_view,
                                    int n_probes) {
  const auto probes = fibonacci_directions(static_cast<std::size_t>(n_probes));
  double residual = 0.0;
  for (const Vec3& x : probes) {
    const double model_p = reconstruct(model, x).prob_plus;
    const double state_p = conditioned_state(steered_view, x, +1).prob;
    residual = std::max(residual, std::abs(model_p - state_p));
  }
  return residual;
}

}  // namespace detail

/**
 * Demonstration report for the phi family at parameter p (Bloch vector u of
 * the attached pure state):
 *
 *  - Bob -> Alice: the explicit unit-weight model reproduces the marginals
 *    and translates the radius-1/4 sphere by exactly the state's center
 *    (p/2) u, so a local model exists and the direction is unsteerable.
 *  - Alice -> Bob: the state's figure sits at (3p/4)(-u), but any unit-weight
 *    model matching the marginals is forced (degree-1 uniqueness through the
 *    half-cosine kernel) to the translation (p/3)(-u). The mismatch rules out
 *    every unit-weight model, and any other model exceeds weight 1, so the
 *    direction is steerable.
 */
inline AsymmetryReport asymmetry_report(double p, const Vec3& u, const QuadratureGrid& grid,
                                        std::size_t circle_samples = 512) {
  if (!(p > 0.0 && p <= 0.2 + 1e-15)) {
    throw std::domain_error("asymmetry_report: p must lie in (0, 1/5]");
  }
  require_unit(u, "phi Bloch vector");

  AsymmetryReport rep;
  rep.p = p;
  rep.u_x = u.normalized();
  rep.u_y = -rep.u_x;
  const CorrelationMatrix state = phi_state(p, rep.u_x);

  // Bob -> Alice: explicit model for Alice's steered figure.
  {
    const GModel model = gmodel_phi_b_to_a(p, rep.u_x, grid);
    DirectionAssessment& d = rep.bob_to_alice;
    d.model_quantity = model.quantity();
    d.required_translation = 0.5 * state.a;
    d.achieved_translation = translation_of(model);
    d.translation_mismatch = (d.required_translation - d.achieved_translation).norm();
    d.marginal_residual = detail::max_marginal_residual(model, swap_parties(state), 100);
    const bool matches = d.model_quantity <= 1.0 + 1e-9 && d.translation_mismatch < 1e-7 &&
                         d.marginal_residual < 1e-6;
    d.verdict = matches ? Verdict::Unsteerable : Verdict::Unknown;
  }

  // Alice -> Bob: the marginal-compatible candidate misses the required
  // translation by (3/4 - 1/3) p.
  {
    const GModel candidate = candidate_q_y(p, rep.u_y, grid);
    DirectionAssessment& d = rep.alice_to_bob;
    d.model_quantity = candidate.quantity();
    d.required_translation = 0.5 * state.b;
    d.achieved_translation = translation_of(candidate);
    d.translation_mismatch = (d.required_translation - d.achieved_translation).norm();
    d.marginal_residual = detail::max_marginal_residual(candidate, state, 100);

    // Certificate: restrict the candidate density to a great circle through
    // u_y, push it through the hemisphere marginal, and recover the odd part.
    Vec3 e2;
    {
      Vec3 e1;
      orthonormal_frame(rep.u_y, e1, e2);
    }
    const Vec3 axis = rep.u_y;
    const auto q_fn = candidate.density_fn;
    const Vec3 w = e2;
    const CircleSignal q_circle = CircleSignal::from_function(
        [&](double phi) { return q_fn(std::cos(phi) * axis + std::sin(phi) * w); },
        circle_samples);
    const CircleSignal g = hemisphere_marginal(q_circle);
    const Deconvolution dec = deconvolve_odd(g);
    const std::size_t n = dec.recovered.size();
    double c1 = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      c1 += dec.recovered.samples[j] * std::cos(dec.recovered.angle(j));
    }
    c1 *= 2.0 / static_cast<double>(n);
    rep.certificate.recovered_cos_coefficient = c1;
    rep.certificate.implied_translation = (2.0 * kPi / 3.0) * c1 * rep.u_y;
    const CircleSignal forward = hemisphere_marginal(dec.recovered);
    double fres = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      fres = std::max(fres, std::abs(forward.samples[j] - g.samples[j]));
    }
    rep.certificate.forward_residual = fres;
    rep.certificate.nullspace_harmonics = dec.nullspace_harmonics;
    rep.certificate.translation_determined =
        std::abs(kernel_coefficient(1)) > 1e-12 && fres < 1e-8;

    rep.werner_limit = d.translation_mismatch <= 1e-9;
    d.verdict = rep.werner_limit
                    ? Verdict::Unknown
                    : (rep.certificate.translation_determined ? Verdict::Steerable
                                                              : Verdict::Unknown);
  }
  return rep;
}

inline AsymmetryReport asymmetry_report(double p, const Vec3& u) {
  return asymmetry_report(p, u, QuadratureGrid::product(128, 256));
}

}  // namespace steerage
