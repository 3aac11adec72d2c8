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

#include <fstream>
#include <string>

#include <json.hpp>

#include "steerage/pauli.hpp"

namespace steerage {

struct spec_parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class StateKind { DensityMatrixInput, GMatrix, BellDiagonal, Werner, PhiState, RefState29 };

inline const char* to_string(StateKind k) {
  switch (k) {
    case StateKind::DensityMatrixInput: return "density_matrix";
    case StateKind::GMatrix: return "g_matrix";
    case StateKind::BellDiagonal: return "bell_diagonal";
    case StateKind::Werner: return "werner";
    case StateKind::PhiState: return "phi_state";
    case StateKind::RefState29: return "ref_state_29";
  }
  return "?";
}

/// One state description parsed from a JSON document with exactly one of the
/// variant keys: density_matrix, g_matrix, bell_diagonal, werner, phi_state,
/// ref_state_29.
struct StateSpec {
  StateKind kind = StateKind::Werner;
  DensityMatrix rho = DensityMatrix::Zero();
  CorrelationMatrix g;
  Vec3 bell_t = Vec3::Zero();
  double p = 0.0;
  Vec3 u = Vec3::UnitZ();
  nlohmann::ordered_json echo;

  CorrelationMatrix to_correlation() const {
    switch (kind) {
      case StateKind::DensityMatrixInput: return pauli_decompose(rho);
      case StateKind::GMatrix: return g;
      case StateKind::BellDiagonal: return bell_diagonal_state(bell_t);
      case StateKind::Werner: return werner_state(p);
      case StateKind::PhiState: return phi_state(p, u);
      case StateKind::RefState29: return phi_state(0.2, Vec3::UnitZ());
    }
    throw spec_parse_error("unreachable state kind");
  }
};

namespace detail {

inline Vec3 parse_vec3(const nlohmann::json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3) {
    throw spec_parse_error(where + ": expected an array of 3 numbers");
  }
  Vec3 v;
  for (int i = 0; i < 3; ++i) {
    if (!j[i].is_number()) throw spec_parse_error(where + ": entries must be numbers");
    v(i) = j[i].get<double>();
  }
  return v;
}

inline Mat3 parse_mat3(const nlohmann::json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3) {
    throw spec_parse_error(where + ": expected a 3x3 array");
  }
  Mat3 m;
  for (int r = 0; r < 3; ++r) {
    const Vec3 row = parse_vec3(j[r], where + " row " + std::to_string(r));
    m.row(r) = row.transpose();
  }
  return m;
}

inline DensityMatrix parse_density(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 4) {
    throw spec_parse_error("density_matrix: expected a 4x4 array of [re, im] pairs");
  }
  DensityMatrix rho;
  for (int r = 0; r < 4; ++r) {
    if (!j[r].is_array() || j[r].size() != 4) {
      throw spec_parse_error("density_matrix: row " + std::to_string(r) + " must have 4 entries");
    }
    for (int c = 0; c < 4; ++c) {
      const auto& e = j[r][c];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
        throw spec_parse_error("density_matrix: entry (" + std::to_string(r) + "," +
                               std::to_string(c) + ") must be [re, im]");
      }
      rho(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
    }
  }
  return rho;
}

}  // namespace detail

inline StateSpec parse_state_spec(const nlohmann::json& j) {
  if (!j.is_object()) throw spec_parse_error("state document must be a JSON object");
  static const char* kVariants[] = {"density_matrix", "g_matrix", "bell_diagonal",
                                    "werner",         "phi_state", "ref_state_29"};
  int found = 0;
  for (const char* key : kVariants) found += j.contains(key) ? 1 : 0;
  if (found != 1) {
    throw spec_parse_error("state document must contain exactly one variant key "
                           "(density_matrix | g_matrix | bell_diagonal | werner | phi_state | "
                           "ref_state_29)");
  }
  StateSpec s;
  s.echo = nlohmann::ordered_json(j);
  if (j.contains("density_matrix")) {
    s.kind = StateKind::DensityMatrixInput;
    s.rho = detail::parse_density(j["density_matrix"]);
  } else if (j.contains("g_matrix")) {
    s.kind = StateKind::GMatrix;
    const auto& gj = j["g_matrix"];
    if (!gj.is_object() || !gj.contains("a") || !gj.contains("b") || !gj.contains("T")) {
      throw spec_parse_error("g_matrix: expected fields a, b, T");
    }
    s.g.a = detail::parse_vec3(gj["a"], "g_matrix.a");
    s.g.b = detail::parse_vec3(gj["b"], "g_matrix.b");
    s.g.T = detail::parse_mat3(gj["T"], "g_matrix.T");
  } else if (j.contains("bell_diagonal")) {
    s.kind = StateKind::BellDiagonal;
    s.bell_t = detail::parse_vec3(j["bell_diagonal"], "bell_diagonal");
  } else if (j.contains("werner")) {
    s.kind = StateKind::Werner;
    const auto& wj = j["werner"];
    if (!wj.is_object() || !wj.contains("p") || !wj["p"].is_number()) {
      throw spec_parse_error("werner: expected {\"p\": number}");
    }
    s.p = wj["p"].get<double>();
  } else if (j.contains("phi_state")) {
    s.kind = StateKind::PhiState;
    const auto& pj = j["phi_state"];
    if (!pj.is_object() || !pj.contains("p") || !pj["p"].is_number()) {
      throw spec_parse_error("phi_state: expected {\"p\": number, \"u\": [x,y,z]?}");
    }
    s.p = pj["p"].get<double>();
    s.u = pj.contains("u") ? detail::parse_vec3(pj["u"], "phi_state.u") : Vec3::UnitZ();
    if (s.u.norm() < 1e-12) throw spec_parse_error("phi_state.u: zero vector");
    s.u.normalize();
  } else {
    s.kind = StateKind::RefState29;
    s.p = 0.2;
    s.u = Vec3::UnitZ();
  }
  return s;
}

inline StateSpec load_state_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw spec_parse_error("cannot open input file: " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw spec_parse_error(std::string("JSON parse error: ") + e.what());
  }
  return parse_state_spec(j);
}

}  // namespace steerage
