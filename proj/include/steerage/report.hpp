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

#include <cstdio>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "steerage/asymmetry.hpp"
#include "steerage/state_input.hpp"

namespace steerage {

// All user-facing numbers go through one formatter (12 significant digits) so
// reports are byte-reproducible.
inline std::string fmt_num(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

inline double round_num(double v) { return std::strtod(fmt_num(v).c_str(), nullptr); }

inline std::string fmt_vec(const Vec3& v) {
  return "(" + fmt_num(v.x()) + ", " + fmt_num(v.y()) + ", " + fmt_num(v.z()) + ")";
}

inline nlohmann::ordered_json json_vec(const Vec3& v) {
  return nlohmann::ordered_json::array({round_num(v.x()), round_num(v.y()), round_num(v.z())});
}

inline const char* to_string(Steering s) {
  return s == Steering::AliceToBob ? "alice_to_bob" : "bob_to_alice";
}

struct DirectionReport {
  Steering direction = Steering::AliceToBob;
  SteeringEllipsoid ellipsoid;
  SteeringQuantity quantity;
  Verdict verdict = Verdict::Unknown;
  std::string evidence;
};

struct AnalysisReport {
  nlohmann::ordered_json state_echo;
  ValidityReport validity;
  CorrelationMatrix basic;
  bool basic_physical = false;
  DirectionReport alice_to_bob;
  DirectionReport bob_to_alice;
  std::optional<AsymmetryReport> asymmetry;
  std::string version{kVersion};
  int grid_theta = 0;
  int grid_phi = 0;
};

namespace detail {

inline void assign_verdict(DirectionReport& d, const CorrelationMatrix& g) {
  const SteeringQuantity& q = d.quantity;
  const double margin = 1e-9 + 4.0 * q.est_error;
  const bool bell_diagonal = g.a.lpNorm<Eigen::Infinity>() <= 1e-9 &&
                             g.b.lpNorm<Eigen::Infinity>() <= 1e-9;
  if (q.value > 1.0 + margin) {
    d.verdict = Verdict::Steerable;
    d.evidence = "S_G = " + fmt_num(q.value) + " > 1 for the basic figure (sufficient criterion)";
  } else if (bell_diagonal) {
    d.verdict = Verdict::Unsteerable;
    d.evidence = "Bell-diagonal state with S_G = " + fmt_num(q.value) + " <= 1 (optimal model)";
  } else {
    d.verdict = Verdict::Unknown;
    d.evidence = "lower bound S_G = " + fmt_num(q.value) + " <= 1; criterion inconclusive";
  }
}

}  // namespace detail

/// Full analysis: validity, both steering figures, the basic-figure quantity
/// and verdicts, plus the asymmetric-steering section for phi-family inputs.
inline AnalysisReport analyze_state(const StateSpec& spec, int grid_theta = 128,
                                    int grid_phi = 256) {
  AnalysisReport rep;
  rep.state_echo = spec.echo;
  rep.grid_theta = grid_theta;
  rep.grid_phi = grid_phi;

  const CorrelationMatrix g = spec.to_correlation();
  rep.validity = validate_state(g);

  const QuadratureGrid grid = QuadratureGrid::product(grid_theta, grid_phi);
  rep.basic = basic_state(g).state;
  rep.basic_physical = validate_state(rep.basic).valid;

  for (Steering dir : {Steering::AliceToBob, Steering::BobToAlice}) {
    DirectionReport d;
    d.direction = dir;
    d.ellipsoid = ellipsoid_of(g, dir);
    d.quantity = steering_quantity(g, dir, grid);
    detail::assign_verdict(d, g);
    (dir == Steering::AliceToBob ? rep.alice_to_bob : rep.bob_to_alice) = d;
  }

  const bool phi_like = spec.kind == StateKind::PhiState || spec.kind == StateKind::RefState29;
  if (phi_like && spec.p > 0.0 && spec.p <= 0.2 + 1e-15) {
    rep.asymmetry = asymmetry_report(spec.p, spec.u, grid);
  }
  return rep;
}

// --- rendering -----------------------------------------------------------

inline std::string render_text(const ValidityReport& v) {
  std::ostringstream os;
  os << "validity: " << (v.valid ? "valid" : "invalid")
     << "  hermiticity_residual = " << fmt_num(v.hermiticity_residual)
     << "  trace_residual = " << fmt_num(v.trace_residual)
     << "  min_eigenvalue = " << fmt_num(v.min_eigenvalue) << "\n";
  return os.str();
}

inline std::string render_text(const AsymmetryReport& a) {
  std::ostringstream os;
  os << "asymmetric steering demonstration (p = " << fmt_num(a.p) << ")\n";
  os << "  u_x = " << fmt_vec(a.u_x) << "  u_y = " << fmt_vec(a.u_y) << "\n";
  const auto dir = [&os](const char* name, const DirectionAssessment& d) {
    os << "  [" << name << "]\n";
    os << "    sphere radius = " << fmt_num(d.sphere_radius)
       << "  model quantity S = " << fmt_num(d.model_quantity) << "\n";
    os << "    required translation = " << fmt_vec(d.required_translation) << "\n";
    os << "    achieved translation = " << fmt_vec(d.achieved_translation) << "\n";
    os << "    translation mismatch = " << fmt_num(d.translation_mismatch)
       << "  marginal residual = " << fmt_num(d.marginal_residual) << "\n";
    os << "    verdict: " << to_string(d.verdict) << "\n";
  };
  dir("bob_to_alice", a.bob_to_alice);
  dir("alice_to_bob", a.alice_to_bob);
  os << "  uniqueness certificate:\n";
  os << "    recovered degree-1 coefficient = " << fmt_num(a.certificate.recovered_cos_coefficient)
     << "\n";
  os << "    implied translation = " << fmt_vec(a.certificate.implied_translation) << "\n";
  os << "    forward residual = " << fmt_num(a.certificate.forward_residual) << "\n";
  os << "    unrecoverable harmonics: ";
  for (std::size_t i = 0; i < a.certificate.nullspace_harmonics.size(); ++i) {
    os << (i ? ", " : "") << "+-" << a.certificate.nullspace_harmonics[i];
  }
  os << "\n    translation determined by marginals: "
     << (a.certificate.translation_determined ? "yes" : "no") << "\n";
  if (a.werner_limit) {
    os << "  note: translations vanish in this limit (isotropic case); no asymmetry to exhibit\n";
  }
  return os.str();
}

inline std::string render_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "steerage " << r.version << "\n";
  os << "state: " << r.state_echo.dump() << "\n";
  os << render_text(r.validity);
  os << "grid: " << r.grid_theta << "x" << r.grid_phi << "\n";
  os << "basic_state: t = " << fmt_vec(Vec3(r.basic.T.diagonal()))
     << "  physical = " << (r.basic_physical ? "yes" : "no") << "\n";
  const auto dir = [&os](const DirectionReport& d) {
    os << "\n[" << to_string(d.direction) << "]\n";
    os << "ellipsoid: center = " << fmt_vec(d.ellipsoid.center) << "\n";
    os << "           semi_axes = " << fmt_vec(d.ellipsoid.semi_axes) << "\n";
    os << "           dimension = " << d.ellipsoid.dimension
       << (d.ellipsoid.borderline ? "  (borderline rank)" : "") << "\n";
    for (int i = 0; i < 3; ++i) {
      os << "           axis" << i + 1 << " = " << fmt_vec(d.ellipsoid.axes.col(i)) << "\n";
    }
    os << "S_G = " << fmt_num(d.quantity.value) << "  dimension = " << d.quantity.dimension
       << "  method = " << to_string(d.quantity.method)
       << "  est_error = " << fmt_num(d.quantity.est_error) << "\n";
    if (!d.quantity.note.empty()) os << "note: " << d.quantity.note << "\n";
    os << "verdict: " << to_string(d.verdict) << "  (" << d.evidence << ")\n";
  };
  dir(r.alice_to_bob);
  dir(r.bob_to_alice);
  if (r.asymmetry) {
    os << "\n" << render_text(*r.asymmetry);
  }
  return os.str();
}

inline nlohmann::ordered_json render_json(const ValidityReport& v) {
  nlohmann::ordered_json j;
  j["valid"] = v.valid;
  j["hermiticity_residual"] = round_num(v.hermiticity_residual);
  j["trace_residual"] = round_num(v.trace_residual);
  j["min_eigenvalue"] = round_num(v.min_eigenvalue);
  return j;
}

inline nlohmann::ordered_json render_json(const AsymmetryReport& a) {
  nlohmann::ordered_json j;
  j["p"] = round_num(a.p);
  j["u_x"] = json_vec(a.u_x);
  j["u_y"] = json_vec(a.u_y);
  const auto dir = [](const DirectionAssessment& d) {
    nlohmann::ordered_json dj;
    dj["sphere_radius"] = round_num(d.sphere_radius);
    dj["model_quantity"] = round_num(d.model_quantity);
    dj["required_translation"] = json_vec(d.required_translation);
    dj["achieved_translation"] = json_vec(d.achieved_translation);
    dj["translation_mismatch"] = round_num(d.translation_mismatch);
    dj["marginal_residual"] = round_num(d.marginal_residual);
    dj["verdict"] = to_string(d.verdict);
    return dj;
  };
  j["bob_to_alice"] = dir(a.bob_to_alice);
  j["alice_to_bob"] = dir(a.alice_to_bob);
  nlohmann::ordered_json c;
  c["recovered_cos_coefficient"] = round_num(a.certificate.recovered_cos_coefficient);
  c["implied_translation"] = json_vec(a.certificate.implied_translation);
  c["forward_residual"] = round_num(a.certificate.forward_residual);
  c["nullspace_harmonics"] = a.certificate.nullspace_harmonics;
  c["translation_determined"] = a.certificate.translation_determined;
  j["certificate"] = c;
  j["werner_limit"] = a.werner_limit;
  return j;
}

inline nlohmann::ordered_json render_json(const AnalysisReport& r) {
  nlohmann::ordered_json j;
  j["tool"] = "steerage";
  j["version"] = r.version;
  j["state"] = r.state_echo;
  j["validity"] = render_json(r.validity);
  j["grid"] = {{"n_theta", r.grid_theta}, {"n_phi", r.grid_phi}};
  j["basic_state"] = {{"t", json_vec(r.basic.T.diagonal())}, {"physical", r.basic_physical}};
  const auto dir = [](const DirectionReport& d) {
    nlohmann::ordered_json dj;
    dj["ellipsoid"] = {{"center", json_vec(d.ellipsoid.center)},
                       {"semi_axes", json_vec(d.ellipsoid.semi_axes)},
                       {"dimension", d.ellipsoid.dimension},
                       {"borderline", d.ellipsoid.borderline}};
    nlohmann::ordered_json axes = nlohmann::ordered_json::array();
    for (int i = 0; i < 3; ++i) axes.push_back(json_vec(d.ellipsoid.axes.col(i)));
    dj["ellipsoid"]["axes"] = axes;
    dj["steering_quantity"] = {{"value", round_num(d.quantity.value)},
                               {"dimension", d.quantity.dimension},
                               {"method", to_string(d.quantity.method)},
                               {"est_error", round_num(d.quantity.est_error)}};
    if (!d.quantity.note.empty()) dj["steering_quantity"]["note"] = d.quantity.note;
    dj["verdict"] = to_string(d.verdict);
    dj["evidence"] = d.evidence;
    return dj;
  };
  j["alice_to_bob"] = dir(r.alice_to_bob);
  j["bob_to_alice"] = dir(r.bob_to_alice);
  if (r.asymmetry) j["asymmetry"] = render_json(*r.asymmetry);
  return j;
}

}  // namespace steerage
