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

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "steerage/ellipsoid.hpp"

using namespace steerage;

TEST_CASE("ellipsoid_of: Werner figure is a centered sphere of radius p/2") {
  for (double p : {0.1, 0.5, 1.0}) {
    const SteeringEllipsoid e = ellipsoid_of(werner_state(p), Steering::AliceToBob);
    CHECK(e.center.norm() == 0.0);
    CHECK(e.dimension == 3);
    for (int i = 0; i < 3; ++i) CHECK(e.semi_axes(i) == Catch::Approx(p / 2).margin(1e-14));
  }
}

TEST_CASE("ellipsoid_of: phi-family spheres sit at the published centers") {
  const double p = 0.2;
  const Vec3 u = Vec3::UnitZ();
  const CorrelationMatrix g = phi_state(p, u);

  const SteeringEllipsoid alice_side = ellipsoid_of(g, Steering::BobToAlice);
  CHECK((alice_side.center - (p / 2) * u).norm() < 1e-14);
  for (int i = 0; i < 3; ++i) CHECK(alice_side.semi_axes(i) == Catch::Approx(0.25).margin(1e-14));

  const SteeringEllipsoid bob_side = ellipsoid_of(g, Steering::AliceToBob);
  CHECK((bob_side.center - 0.75 * p * (-u)).norm() < 1e-14);
  for (int i = 0; i < 3; ++i) CHECK(bob_side.semi_axes(i) == Catch::Approx(0.25).margin(1e-14));
}

TEST_CASE("dimension classification and borderline flag") {
  CHECK(make_ellipsoid(Vec3::Zero(), Mat3::Zero()).dimension == 0);
  CHECK(make_ellipsoid(Vec3::Zero(), Vec3(0.3, 0.0, 0.0).asDiagonal()).dimension == 1);
  CHECK(make_ellipsoid(Vec3::Zero(), Vec3(0.3, 0.2, 0.0).asDiagonal()).dimension == 2);
  CHECK(make_ellipsoid(Vec3::Zero(), Vec3(0.3, 0.2, 0.1).asDiagonal()).dimension == 3);

  const SteeringEllipsoid tiny = make_ellipsoid(Vec3::Zero(), Vec3(0.3, 1e-7, 0.0).asDiagonal());
  CHECK(tiny.dimension == 2);
  CHECK(tiny.borderline);

  const SteeringEllipsoid below = make_ellipsoid(Vec3::Zero(), Vec3(0.3, 1e-10, 0.0).asDiagonal());
  CHECK(below.dimension == 1);
  CHECK_FALSE(below.borderline);
}

TEST_CASE("support_value") {
  SECTION("sphere: constant p/2") {
    const SteeringEllipsoid e = ellipsoid_of(werner_state(0.7), Steering::AliceToBob);
    oracles::Rng rng(31);
    for (int k = 0; k < 20; ++k) {
      CHECK(support_value(e, rng.unit_vec()) == Catch::Approx(0.35).margin(1e-14));
    }
  }
  SECTION("zero shape gives zero") {
    CHECK(support_value(make_ellipsoid(Vec3::Zero(), Mat3::Zero()), Vec3::UnitX()) == 0.0);
  }
  SECTION("axis-aligned maximum") {
    const SteeringEllipsoid e =
        make_ellipsoid(Vec3::Zero(), Mat3(Vec3(0.3, 0.2, 0.1).asDiagonal()).transpose());
    CHECK(support_value(e, Vec3::UnitX()) == Catch::Approx(0.3).margin(1e-14));
  }
  SECTION("homogeneity under scaling") {
    oracles::Rng rng(37);
    const Mat3 m = 0.4 * Mat3::Random();
    for (double c : {0.0, 0.3, 2.0}) {
      const Vec3 n = rng.unit_vec();
      CHECK(support_value(make_ellipsoid(Vec3::Zero(), c * m), n) ==
            Catch::Approx(c * support_value(make_ellipsoid(Vec3::Zero(), m), n)).margin(1e-12));
    }
  }
  SECTION("non-unit direction rejected") {
    CHECK_THROWS_AS(support_value(ellipsoid_of(werner_state(0.5), Steering::AliceToBob),
                                  Vec3(0.2, 0, 0)),
                    precondition_error);
  }
}

TEST_CASE("normal_at") {
  SECTION("sphere normal is radial") {
    const SteeringEllipsoid e = ellipsoid_of(werner_state(0.6), Steering::AliceToBob);
    oracles::Rng rng(41);
    for (int k = 0; k < 10; ++k) {
      const Vec3 x = rng.unit_vec();
      const Vec3 n = normal_at(e, x);
      const Vec3 surface_dir = (e.shape * x).normalized();
      CHECK((n - surface_dir).norm() < 1e-12);
    }
  }
  SECTION("principal axis of an in-plane ellipse") {
    const SteeringEllipsoid e =
        make_ellipsoid(Vec3::Zero(), 0.5 * Mat3(Vec3(0.8, 0.2, 0.0).asDiagonal()).transpose());
    CHECK((normal_at(e, Vec3::UnitX()) - Vec3::UnitX()).norm() < 1e-14);
  }
  SECTION("orthogonal to finite-difference tangents of random 2D ellipses") {
    oracles::Rng rng(43);
    for (int k = 0; k < 10; ++k) {
      const Mat3 r1 = rng.rotation();
      const Mat3 r2 = rng.rotation();
      const Mat3 shape = r1 * Vec3(0.45, rng.uniform(0.05, 0.4), 0.0).asDiagonal() * r2.transpose();
      const SteeringEllipsoid e = make_ellipsoid(Vec3::Zero(), shape);
      REQUIRE(e.dimension == 2);
      // boundary parametrization through the right singular vectors
      const double t = rng.uniform(0.0, 2.0 * kPi);
      const auto x_of = [&](double s) {
        return Vec3(std::cos(s) * e.input_axes.col(0) + std::sin(s) * e.input_axes.col(1));
      };
      const Vec3 n = normal_at(e, x_of(t));
      const double h = 1e-6;
      const Vec3 tangent = (shape * x_of(t + h) - shape * x_of(t - h)) / (2.0 * h);
      CHECK(std::abs(n.dot(tangent.normalized())) < 1e-8);
      CHECK(std::abs(n.dot(e.axes.col(2))) < 1e-12);  // stays in the ellipse plane
    }
  }
  SECTION("surface point projects onto its normal with the support value") {
    oracles::Rng rng(47);
    for (int k = 0; k < 20; ++k) {
      const Mat3 shape =
          rng.rotation() *
          Vec3(rng.uniform(0.2, 0.5), rng.uniform(0.1, 0.2), rng.uniform(0.01, 0.1)).asDiagonal() *
          rng.rotation().transpose();
      const SteeringEllipsoid e = make_ellipsoid(Vec3::Zero(), shape);
      const Vec3 x = rng.unit_vec();
      const Vec3 n = normal_at(e, x);
      CHECK(std::abs((e.shape * x).dot(n) - support_value(e, n)) < 1e-10);
    }
  }
  SECTION("low-dimensional figures are rejected") {
    CHECK_THROWS_AS(normal_at(make_ellipsoid(Vec3::Zero(), Vec3(0.3, 0, 0).asDiagonal()),
                              Vec3::UnitX()),
                    unsupported_dimension_error);
  }
}

TEST_CASE("sample_assemblage") {
  SECTION("Werner 1/2: all shrinked vectors have length 1/4") {
    oracles::Rng rng(53);
    std::vector<Vec3> dirs;
    for (int k = 0; k < 100; ++k) dirs.push_back(rng.unit_vec());
    for (const auto& s : sample_assemblage(werner_state(0.5), dirs)) {
      CHECK(s.plus.shrinked.norm() == Catch::Approx(0.25).margin(1e-14));
      CHECK(s.minus.shrinked.norm() == Catch::Approx(0.25).margin(1e-14));
    }
  }
  SECTION("T = 0: every sample sits at the center b/2") {
    CorrelationMatrix g;
    g.b = Vec3(0.1, -0.2, 0.3);
    const std::vector<Vec3> dirs = {Vec3::UnitX(), Vec3::UnitY(), Vec3::UnitZ()};
    for (const auto& s : sample_assemblage(g, dirs)) {
      CHECK((s.plus.shrinked - 0.5 * g.b).norm() < 1e-15);
      CHECK((s.plus.shrinked + s.minus.shrinked - g.b).norm() < 1e-15);
    }
  }
  SECTION("phi family reproduces the cosine marginal") {
    const std::vector<Vec3> dirs = {-Vec3::UnitZ()};  // u_Y for the default preset
    const auto samples =
        sample_assemblage(phi_state(0.2, Vec3::UnitZ()), dirs, Steering::BobToAlice);
    CHECK(samples[0].plus.prob == Catch::Approx(0.65).margin(1e-14));
  }
  SECTION("samples lie on the steering figure") {
    oracles::Rng rng(59);
    for (int k = 0; k < 10; ++k) {
      const CorrelationMatrix g = pauli_decompose(rng.density_matrix());
      const SteeringEllipsoid e = ellipsoid_of(g, Steering::AliceToBob);
      const Vec3 x = rng.unit_vec();
      const auto samples = sample_assemblage(g, std::vector<Vec3>{x});
      CHECK((samples[0].plus.shrinked - (e.center + e.shape * x)).norm() < 1e-12);
    }
  }
}

TEST_CASE("rotation covariance of the steering figure") {
  oracles::Rng rng(61);
  for (int k = 0; k < 10; ++k) {
    const CorrelationMatrix g = pauli_decompose(rng.density_matrix());
    const Mat3 ra = rng.rotation();
    const Mat3 rb = rng.rotation();
    CorrelationMatrix rotated;
    rotated.a = ra * g.a;
    rotated.b = rb * g.b;
    rotated.T = ra * g.T * rb.transpose();

    const SteeringEllipsoid e = ellipsoid_of(g, Steering::AliceToBob);
    const SteeringEllipsoid er = ellipsoid_of(rotated, Steering::AliceToBob);
    CHECK((er.center - rb * e.center).norm() < 1e-12);
    CHECK((er.semi_axes - e.semi_axes).norm() < 1e-12);
    const Vec3 n = rng.unit_vec();
    CHECK(support_value(er, n) ==
          Catch::Approx(support_value(e, (rb.transpose() * n).normalized())).margin(1e-12));
  }
}

TEST_CASE("1D figure: endpoints at distance s1, so the length is 2 s1") {
  const double t1 = 0.62;
  const SteeringEllipsoid e =
      ellipsoid_of(bell_diagonal_state({t1, 0.0, 0.0}), Steering::AliceToBob);
  CHECK(e.dimension == 1);
  CHECK(e.semi_axes(0) == Catch::Approx(t1 / 2).margin(1e-14));
  CHECK((e.shape * Vec3::UnitX()).norm() == Catch::Approx(t1 / 2).margin(1e-14));
  CHECK((e.shape * Vec3::UnitX() + e.shape * (-Vec3::UnitX())).norm() < 1e-15);
}

TEST_CASE("probability Bloch sphere containment for valid states") {
  oracles::Rng rng(67);
  for (int k = 0; k < 15; ++k) {
    const CorrelationMatrix g = pauli_decompose(rng.density_matrix());
    for (Steering dir : {Steering::AliceToBob, Steering::BobToAlice}) {
      const SteeringEllipsoid e = ellipsoid_of(g, dir);
      for (int j = 0; j < 10; ++j) {
        const Vec3 x = rng.unit_vec();
        CHECK((e.center + e.shape * x).norm() <= 1.0 + 1e-12);
      }
    }
  }
}
