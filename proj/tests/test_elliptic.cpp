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
#include "steerage/elliptic.hpp"

using steerage::elliptic_e;
using steerage::kPi;

namespace {

double defining_integral(double m) {
  return oracles::romberg([m](double t) { return std::sqrt(1.0 - m * std::sin(t) * std::sin(t)); },
                          0.0, 0.5 * kPi);
}

}  // namespace

TEST_CASE("limits are exact") {
  CHECK(elliptic_e(0.0) == Catch::Approx(kPi / 2.0).margin(1e-14));
  CHECK(elliptic_e(1.0) == Catch::Approx(1.0).margin(1e-14));
}

TEST_CASE("frozen reference value") {
  // Quadrature of the defining integral at m = 0.75 gives 1.2110560275684594.
  CHECK(elliptic_e(0.75) == Catch::Approx(1.2110560275684594).margin(5e-15));
  CHECK(std::abs(elliptic_e(0.75) - defining_integral(0.75)) < 1e-13);
}

TEST_CASE("AGM matches the defining integral on random parameters") {
  oracles::Rng rng(101);
  for (int i = 0; i < 50; ++i) {
    const double m = rng.uniform(0.0, 1.0);
    CAPTURE(m);
    CHECK(std::abs(elliptic_e(m) - defining_integral(m)) < 1e-12);
  }
}

TEST_CASE("monotone decreasing in m") {
  double prev = elliptic_e(0.0);
  for (int i = 1; i <= 100; ++i) {
    const double v = elliptic_e(i / 100.0);
    CHECK(v < prev + 1e-15);
    prev = v;
  }
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(elliptic_e(-0.1), std::domain_error);
  CHECK_THROWS_AS(elliptic_e(1.1), std::domain_error);
  CHECK_THROWS_AS(elliptic_e(std::nan("")), std::domain_error);
}
