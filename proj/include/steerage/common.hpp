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

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

namespace steerage {

inline constexpr std::string_view kVersion = "0.1.0";

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Mat2c = Eigen::Matrix2cd;
using Mat4c = Eigen::Matrix4cd;
using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kFourPi = 4.0 * std::numbers::pi;

// Tolerances shared across the library.
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kEigenvalueSlack = -1e-10;  // positivity slack
inline constexpr double kUnitTol = 1e-12;
inline constexpr double kRankTol = 1e-9;            // singular value ~ 0 below kRankTol*max(s1,1)
inline constexpr double kBorderlineTol = 1e-6;      // rank calls inside [kRankTol, kBorderlineTol) are flagged

struct invalid_state_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct precondition_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct unsupported_dimension_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct unsupported_form_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct undefined_probability_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Compensated (Kahan) accumulator; summation order is fixed by the caller,
/// which keeps partitioned quadrature deterministic.
class KahanSum {
 public:
  void add(double x) {
    const double y = x - comp_;
    const double t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

inline bool is_unit(const Vec3& v, double tol = kUnitTol) {
  return std::abs(v.norm() - 1.0) <= tol;
}

inline void require_unit(const Vec3& v, const char* what) {
  if (!is_unit(v)) {
    throw precondition_error(std::string(what) + " must be a unit vector (|v| = " +
                             std::to_string(v.norm()) + ")");
  }
}

/// Deterministic unit vector orthogonal to u.
inline Vec3 any_orthonormal(const Vec3& u) {
  const Vec3 seed = std::abs(u.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
  return u.cross(seed).normalized();
}

/// Right-handed orthonormal frame (e1, e2, axis).
inline void orthonormal_frame(const Vec3& axis, Vec3& e1, Vec3& e2) {
  e1 = any_orthonormal(axis);
  e2 = axis.cross(e1).normalized();
}

namespace detail {

// Recursive adaptive Simpson; used for in-library quadrature cross-checks.
// The error estimate is trusted only below min_depth: oscillatory integrands
// can alias onto low-order polynomials at the first dyadic sample points.
inline double adaptive_simpson_rec(const std::function<double(double)>& f, double a, double b,
                                   double fa, double fm, double fb, double whole, double tol,
                                   int depth, int min_depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || (min_depth <= 0 && std::abs(delta) <= 15.0 * tol)) {
    return left + right + delta / 15.0;
  }
  return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, min_depth - 1) +
         adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, min_depth - 1);
}

}  // namespace detail

inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double tol = 1e-13, int max_depth = 48, int min_depth = 8) {
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol, max_depth, min_depth);
}

}  // namespace steerage
