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

#include <algorithm>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "steerage/gmodel.hpp"

namespace steerage {

/// Real signal sampled at 2^k uniform angles phi_j = 2 pi j / N, N >= 64.
struct CircleSignal {
  std::vector<double> samples;

  explicit CircleSignal(std::vector<double> s) : samples(std::move(s)) {
    const std::size_t n = samples.size();
    if (n < 64 || (n & (n - 1)) != 0) {
      throw precondition_error("CircleSignal: sample count must be a power of two >= 64");
    }
  }

  std::size_t size() const { return samples.size(); }

  double angle(std::size_t j) const { return 2.0 * kPi * static_cast<double>(j) / samples.size(); }

  static CircleSignal from_function(const std::function<double(double)>& f, std::size_t n = 512) {
    std::vector<double> s(n);
    for (std::size_t j = 0; j < n; ++j) s[j] = f(2.0 * kPi * static_cast<double>(j) / n);
    return CircleSignal(std::move(s));
  }
};

namespace detail {

/// In-place iterative radix-2 FFT, X_k = sum_j x_j exp(-2 pi i j k / N).
inline void fft_radix2(std::vector<Complex>& x, bool inverse) {
  const std::size_t n = x.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(x[i], x[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = (inverse ? 2.0 : -2.0) * kPi / static_cast<double>(len);
    const Complex wl(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      Complex w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const Complex u = x[i + k];
        const Complex v = x[i + k + len / 2] * w;
        x[i + k] = u + v;
        x[i + k + len / 2] = u - v;
        w *= wl;
      }
    }
  }
  if (inverse) {
    for (auto& v : x) v /= static_cast<double>(n);
  }
}

/// Fourier coefficients c_n = (1/2pi) int f exp(-i n phi) d phi of the sampled
/// signal, indexed by FFT bin (bin k holds n = k for k <= N/2, n = k - N above).
inline std::vector<Complex> spectrum(const CircleSignal& s) {
  std::vector<Complex> x(s.samples.begin(), s.samples.end());
  fft_radix2(x, false);
  for (auto& v : x) v /= static_cast<double>(s.size());
  return x;
}

inline int bin_to_harmonic(std::size_t k, std::size_t n) {
  return k <= n / 2 ? static_cast<int>(k) : static_cast<int>(k) - static_cast<int>(n);
}

}  // namespace detail

/**
 * Fourier coefficient of the half-cosine kernel
 *   f(phi) = cos(phi) on [-pi/2, pi/2], 0 elsewhere,
 * in the convention c_n = (1/2pi) int f(phi) exp(-i n phi) d phi. The kernel
 * is even, so the coefficients are real and even in n. Closed form:
 *   F(+-1) = 1/4,
 *   F(n)   = [sin((n-1)pi/2)/(n-1) + sin((n+1)pi/2)/(n+1)] / (2 pi),
 * which vanishes exactly for odd |n| >= 3.
 */
inline double kernel_coefficient(int n) {
  const int a = std::abs(n);
  if (a == 1) return 0.25;
  // sin(k pi / 2) for integer k, exactly.
  const auto sin_quarter = [](int k) {
    switch (((k % 4) + 4) % 4) {
      case 1: return 1.0;
      case 3: return -1.0;
      default: return 0.0;
    }
  };
  const double s1 = sin_quarter(a - 1);
  const double s2 = sin_quarter(a + 1);
  return (s1 / (a - 1) + s2 / (a + 1)) / (2.0 * kPi);
}

struct KernelCoefficient {
  int n = 0;
  double value = 0.0;
  bool zero = false;  // |value| < 1e-12
};

/// Coefficients F(0..n_max), each cross-checked against direct quadrature of
/// the defining integral to 1e-12 (coefficients are even in n).
inline std::vector<KernelCoefficient> kernel_coefficients(int n_max) {
  if (n_max < 1) throw precondition_error("kernel_coefficients: n_max must be >= 1");
  std::vector<KernelCoefficient> out;
  out.reserve(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    const double analytic = kernel_coefficient(n);
    const double quad =
        adaptive_simpson([n](double t) { return std::cos(t) * std::cos(n * t); }, -0.5 * kPi,
                         0.5 * kPi, 1e-14) /
        (2.0 * kPi);
    if (std::abs(analytic - quad) > 1e-12) {
      throw numeric_error("kernel_coefficients: analytic/quadrature mismatch at n = " +
                          std::to_string(n));
    }
    out.push_back({n, analytic, std::abs(analytic) < 1e-12});
  }
  return out;
}

/**
 * Hemisphere-marginal signal of a density restricted to a great circle:
 * the odd part y(phi) = (q(phi) - q(phi + pi)) / 2 convolved with the
 * half-cosine kernel,
 *   g(phi) = int y(phi') f(phi' - phi) d phi'.
 * Computed in the Fourier domain (G_n = 2 pi F(n) Y_n), which is exact for
 * the band-limited reading of the samples.
 */
inline CircleSignal hemisphere_marginal(const CircleSignal& q) {
  const std::size_t n = q.size();
  std::vector<Complex> y(n);
  for (std::size_t j = 0; j < n; ++j) {
    y[j] = 0.5 * (q.samples[j] - q.samples[(j + n / 2) % n]);
  }
  detail::fft_radix2(y, false);
  for (std::size_t k = 0; k < n; ++k) {
    y[k] *= 2.0 * kPi * kernel_coefficient(detail::bin_to_harmonic(k, n));
  }
  detail::fft_radix2(y, true);
  std::vector<double> g(n);
  for (std::size_t j = 0; j < n; ++j) g[j] = y[j].real();
  return CircleSignal(std::move(g));
}

struct Deconvolution {
  CircleSignal recovered;               // odd part on the recoverable subspace
  std::vector<int> nullspace_harmonics; // odd harmonics annihilated by the kernel
  double inconsistent_content = 0.0;    // relative energy outside the kernel image
};

/**
 * Inverts the hemisphere marginal on the recoverable subspace:
 * Y(n) = G(n) / (2 pi F(n)) wherever |F(n)| is above tolerance and n is odd.
 * A marginal generated by an odd density carries only the degree +-1
 * harmonics, so any even content (or odd content in the kernel's null space)
 * marks the input as inconsistent and is rejected. The harmonics that no
 * marginal can determine are reported, never silently zeroed.
 */
inline Deconvolution deconvolve_odd(const CircleSignal& g) {
  const std::size_t n = g.size();
  const auto spec = detail::spectrum(g);
  double total_sq = 0.0;
  double outside_sq = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const int harmonic = detail::bin_to_harmonic(k, n);
    const double e = std::norm(spec[k]);
    total_sq += e;
    const bool recoverable = std::abs(harmonic) == 1;
    if (!recoverable) outside_sq += e;
  }
  Deconvolution out{CircleSignal(std::vector<double>(n, 0.0)), {}, 0.0};
  const int report_max = std::min<int>(static_cast<int>(n / 2) - 1, 33);
  for (int h = 3; h <= report_max; h += 2) out.nullspace_harmonics.push_back(h);
  if (total_sq <= 1e-300) {
    return out;  // g == 0: y == 0 plus the null-space listing
  }
  out.inconsistent_content = std::sqrt(outside_sq / total_sq);
  if (out.inconsistent_content > 1e-8) {
    throw precondition_error(
        "deconvolve_odd: signal has harmonic content no odd density can generate "
        "(relative energy " +
        std::to_string(out.inconsistent_content) + ")");
  }
  std::vector<Complex> y(n, Complex(0.0, 0.0));
  for (std::size_t k = 0; k < n; ++k) {
    const int harmonic = detail::bin_to_harmonic(k, n);
    const double f = kernel_coefficient(harmonic);
    if (harmonic % 2 != 0 && std::abs(f) >= 1e-12) {
      y[k] = spec[k] * static_cast<double>(n) / (2.0 * kPi * f);
    }
  }
  detail::fft_radix2(y, true);
  for (std::size_t j = 0; j < n; ++j) out.recovered.samples[j] = y[j].real();
  return out;
}

struct TranslationUniquenessReport {
  bool preconditions_met = false;
  double marginal_mismatch = 0.0;  // max |p1 - p2| over the probe measurements
  Vec3 t1 = Vec3::Zero();
  Vec3 t2 = Vec3::Zero();
  double translation_delta = 0.0;
  bool pass = false;
};

/**
 * Checks the uniqueness statement for translations: two models with the same
 * hemispherical response and identical outcome marginals must generate the
 * same translation vector (their densities share the odd part). Marginals are
 * compared on a seeded probe set; translations come from the odd-part moment,
 * so even-part differences between the models cannot move them.
 */
inline TranslationUniquenessReport translation_uniqueness_check(const GModel& model1,
                                                                const GModel& model2,
                                                                int n_measurements = 200,
                                                                std::uint64_t seed = 20260809) {
  TranslationUniquenessReport rep;
  const bool hemispherical1 = model1.response.kind == ResponseRule::Kind::WernerRadial ||
                              model1.response.kind == ResponseRule::Kind::Hemisphere3D;
  const bool hemispherical2 = model2.response.kind == ResponseRule::Kind::WernerRadial ||
                              model2.response.kind == ResponseRule::Kind::Hemisphere3D;
  bool responses_match = hemispherical1 && hemispherical2 &&
                         model1.response.kind == model2.response.kind;
  if (responses_match && model1.response.kind == ResponseRule::Kind::Hemisphere3D) {
    responses_match = (model1.response.shape - model2.response.shape).norm() <= 1e-12;
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double mismatch = 0.0;
  if (responses_match) {
    for (int i = 0; i < n_measurements; ++i) {
      const double z = 2.0 * unif(rng) - 1.0;
      const double phi = 2.0 * kPi * unif(rng);
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      const Vec3 x(r * std::cos(phi), r * std::sin(phi), z);
      const double p1 = reconstruct(model1, x).prob_plus;
      const double p2 = reconstruct(model2, x).prob_plus;
      mismatch = std::max(mismatch, std::abs(p1 - p2));
    }
  }
  rep.marginal_mismatch = mismatch;
  rep.preconditions_met = responses_match && mismatch <= 1e-8;

  if (hemispherical1 && !model1.density.empty()) {
    rep.t1 = translation_of(model1, EvenPolicy::IgnoreEven);
  }
  if (hemispherical2 && !model2.density.empty()) {
    rep.t2 = translation_of(model2, EvenPolicy::IgnoreEven);
  }
  rep.translation_delta = (rep.t1 - rep.t2).norm();
  rep.pass = rep.preconditions_met && rep.translation_delta < 1e-7;
  return rep;
}

}  // namespace steerage
