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

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <array>
#include <string>

#include "steerage/common.hpp"

namespace steerage {

using DensityMatrix = Mat4c;

/**
 * Pauli-basis coefficients of a two-qubit state: Bloch vectors a (Alice) and
 * b (Bob) plus the 3x3 correlation block T. Together with the fixed unit
 * coefficient on identity x identity these are the 16 real coordinates of the
 * state.
 */
struct CorrelationMatrix {
  Vec3 a = Vec3::Zero();
  Vec3 b = Vec3::Zero();
  Mat3 T = Mat3::Zero();
};

struct ValidityReport {
  double hermiticity_residual = 0.0;
  double trace_residual = 0.0;
  double min_eigenvalue = 0.0;
  bool valid = false;
};

/// Outcome probability and the unnormalized (shrinked) Bloch vector of the
/// steered side after a projective measurement on the other side.
struct ConditionedState {
  double prob = 0.0;
  Vec3 shrinked = Vec3::Zero();
};

inline const std::array<Mat2c, 4>& pauli_matrices() {
  static const std::array<Mat2c, 4> sigma = [] {
    std::array<Mat2c, 4> s;
    s[0] << 1, 0, 0, 1;
    s[1] << 0, 1, 1, 0;
    s[2] << 0, Complex(0, -1), Complex(0, 1), 0;
    s[3] << 1, 0, 0, -1;
    return s;
  }();
  return sigma;
}

inline Mat4c kron(const Mat2c& A, const Mat2c& B) {
  Mat4c K;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) K.block<2, 2>(2 * i, 2 * j) = A(i, j) * B;
  return K;
}

namespace detail {

inline double hermiticity_residual(const DensityMatrix& rho) {
  return (rho - rho.adjoint().eval()).cwiseAbs().maxCoeff();
}

inline double min_eigenvalue(const DensityMatrix& rho) {
  const Mat4c herm = 0.5 * (rho + rho.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<Mat4c> solver(herm);
  return solver.eigenvalues().minCoeff();
}

}  // namespace detail

/// Coefficients G_uv = Tr[rho (sigma_u x sigma_v)]. Rejects inputs that are
/// not Hermitian unit-trace positive matrices (within the numeric slack).
inline CorrelationMatrix pauli_decompose(const DensityMatrix& rho) {
  const double herm = detail::hermiticity_residual(rho);
  if (herm > kHermitianTol) {
    throw invalid_state_error("pauli_decompose: matrix is not Hermitian (max residual " +
                              std::to_string(herm) + ")");
  }
  const double trace_res = std::abs(rho.trace() - Complex(1.0, 0.0));
  if (trace_res > kTraceTol) {
    throw invalid_state_error("pauli_decompose: trace differs from 1 (residual " +
                              std::to_string(trace_res) + ")");
  }
  const double min_eig = detail::min_eigenvalue(rho);
  if (min_eig < kEigenvalueSlack) {
    throw invalid_state_error("pauli_decompose: negative eigenvalue " + std::to_string(min_eig));
  }
  const auto& sigma = pauli_matrices();
  CorrelationMatrix g;
  for (int u = 1; u < 4; ++u) {
    g.a(u - 1) = (rho * kron(sigma[u], sigma[0])).trace().real();
    g.b(u - 1) = (rho * kron(sigma[0], sigma[u])).trace().real();
    for (int v = 1; v < 4; ++v) {
      g.T(u - 1, v - 1) = (rho * kron(sigma[u], sigma[v])).trace().real();
    }
  }
  return g;
}

/// Inverse expansion rho = (1/4) sum_uv G_uv sigma_u x sigma_v. The result can
/// fail positivity for arbitrary coefficients; use validate_state to check.
inline DensityMatrix pauli_compose(const CorrelationMatrix& g) {
  const auto& sigma = pauli_matrices();
  Mat4c rho = kron(sigma[0], sigma[0]);
  for (int u = 1; u < 4; ++u) {
    rho += g.a(u - 1) * kron(sigma[u], sigma[0]);
    rho += g.b(u - 1) * kron(sigma[0], sigma[u]);
    for (int v = 1; v < 4; ++v) {
      rho += g.T(u - 1, v - 1) * kron(sigma[u], sigma[v]);
    }
  }
  return 0.25 * rho;
}

/// Never throws; failures are carried in the report.
inline ValidityReport validate_state(const CorrelationMatrix& g) {
  const DensityMatrix rho = pauli_compose(g);
  ValidityReport r;
  r.hermiticity_residual = detail::hermiticity_residual(rho);
  r.trace_residual = std::abs(rho.trace() - Complex(1.0, 0.0));
  r.min_eigenvalue = detail::min_eigenvalue(rho);
  r.valid = r.hermiticity_residual <= kHermitianTol && r.trace_residual <= kTraceTol &&
            r.min_eigenvalue >= kEigenvalueSlack;
  return r;
}

/// Swap the roles of the two parties: a <-> b, T -> T^t.
inline CorrelationMatrix swap_parties(const CorrelationMatrix& g) {
  return CorrelationMatrix{g.b, g.a, g.T.transpose()};
}

/**
 * Conditioned state of the steered side when the other side projects onto
 * +-x. For outcome sign s in {+1, -1}:
 *   prob     = (1 + s x.a) / 2,
 *   shrinked = (b + s T^t x) / 2.
 * The two outcomes always satisfy prob+ + prob- = 1 and s+ + s- = b.
 */
inline ConditionedState conditioned_state(const CorrelationMatrix& g, const Vec3& x, int sign) {
  require_unit(x, "measurement direction");
  if (sign != +1 && sign != -1) {
    throw precondition_error("conditioned_state: outcome sign must be +1 or -1");
  }
  const double s = static_cast<double>(sign);
  ConditionedState c;
  c.prob = 0.5 * (1.0 + s * x.dot(g.a));
  c.shrinked = 0.5 * (g.b + s * g.T.transpose() * x);
  return c;
}

struct BasicStateResult {
  CorrelationMatrix state;  // a = b = 0, T diagonal
  Mat3 R1;                  // proper rotations with T = R1 * state.T * R2^t
  Mat3 R2;
};

/**
 * Bell-diagonal representative sharing the correlation shape of g: a signed
 * SVD T = R1 T' R2^t with R1, R2 in SO(3). Determinant corrections are folded
 * into the last column, so T' is diagonal, sorted by absolute value, with at
 * most one negative entry (the smallest).
 */
inline BasicStateResult basic_state(const CorrelationMatrix& g) {
  Eigen::JacobiSVD<Mat3> svd(g.T, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Mat3 U = svd.matrixU();
  Mat3 V = svd.matrixV();
  Vec3 s = svd.singularValues();
  double last_sign = 1.0;
  if (U.determinant() < 0.0) {
    U.col(2) *= -1.0;
    last_sign = -last_sign;
  }
  if (V.determinant() < 0.0) {
    V.col(2) *= -1.0;
    last_sign = -last_sign;
  }
  BasicStateResult out;
  out.state.T = Mat3::Zero();
  out.state.T(0, 0) = s(0);
  out.state.T(1, 1) = s(1);
  out.state.T(2, 2) = last_sign * s(2);
  out.R1 = U;
  out.R2 = V;
  return out;
}

// --- state presets ------------------------------------------------------

/// Isotropic singlet mixture: p * singlet + (1-p) * I/4; T = -p * I.
inline CorrelationMatrix werner_state(double p) {
  if (p < 0.0 || p > 1.0) throw std::domain_error("werner_state: p must lie in [0, 1]");
  CorrelationMatrix g;
  g.T = -p * Mat3::Identity();
  return g;
}

inline CorrelationMatrix bell_diagonal_state(const Vec3& t) {
  CorrelationMatrix g;
  g.T = t.asDiagonal();
  return g;
}

/**
 * One-parameter family mixing the singlet with one-sided pure-state noise:
 * u is the Bloch vector of the qubit state phi attached to Alice's side; the
 * orthogonal state (Bloch vector -u) is attached to Bob's with weight 3p/2.
 * In coefficients: a = p u, b = -(3/2) p u, T = -I/2. Physical for p <= 1/5.
 */
inline CorrelationMatrix phi_state(double p, const Vec3& u = Vec3::UnitZ()) {
  require_unit(u, "phi_state Bloch vector");
  CorrelationMatrix g;
  g.a = p * u;
  g.b = -1.5 * p * u;
  g.T = -0.5 * Mat3::Identity();
  return g;
}

inline DensityMatrix singlet_density() {
  Eigen::Vector4cd v;
  v << 0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0;
  return v * v.adjoint();
}

}  // namespace steerage
