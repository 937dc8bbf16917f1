// Copyright 2026 the gcwave authors
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "gcwave/common.hpp"
#include "gcwave/spectral.hpp"

using namespace gcwave;
namespace sp = gcwave::spectral;

namespace {

std::vector<double> gridAlpha(std::size_t n) {
  std::vector<double> a(n);
  for (std::size_t j = 0; j < n; ++j) a[j] = kTwoPi * j / n;
  return a;
}

double maxAbsDiff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    m = std::max(m, std::abs(a[j] - b[j]));
  }
  return m;
}

double maxAbsDiff(const std::vector<cd>& a, const std::vector<cd>& b) {
  double m = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    m = std::max(m, std::abs(a[j] - b[j]));
  }
  return m;
}

std::vector<cd> randomComplexField(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<cd> f(n);
  for (cd& v : f) v = cd(dist(rng), dist(rng));
  return f;
}

std::vector<double> randomRealFieldNoNyquist(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> f(n);
  for (double& v : f) v = dist(rng);
  // Remove the Nyquist mode so real-valued spectral operations are exact.
  std::vector<cd> c = sp::fft(sp::toComplex(f));
  c[n / 2] = 0.0;
  return sp::realPart(sp::ifft(c));
}

}  // namespace

TEST_CASE("fft/ifft round trip is exact to machine precision") {
  const std::size_t n = 64;
  std::vector<cd> f = randomComplexField(n, 7u);
  std::vector<cd> g = sp::ifft(sp::fft(f));
  CHECK(maxAbsDiff(f, g) < 1e-13);
}

TEST_CASE("fft uses the 1/n-scaled exp(ik alpha) convention") {
  const std::size_t n = 32;
  std::vector<double> a = gridAlpha(n);
  std::vector<cd> f(n);
  for (std::size_t j = 0; j < n; ++j) {
    f[j] = 2.0 + std::cos(3.0 * a[j]);  // coeffs: 2 at k=0, 1/2 at k=+-3
  }
  std::vector<cd> c = sp::fft(f);
  CHECK(std::abs(c[0] - cd(2.0, 0.0)) < 1e-13);
  CHECK(std::abs(c[3] - cd(0.5, 0.0)) < 1e-13);
  CHECK(std::abs(c[n - 3] - cd(0.5, 0.0)) < 1e-13);
  CHECK(std::abs(c[5]) < 1e-13);
  CHECK(std::abs(sp::meanValue(f) - cd(2.0, 0.0)) < 1e-13);
}

TEST_CASE("derivative in alpha differentiates trig modes exactly") {
  const std::size_t n = 64;
  std::vector<double> a = gridAlpha(n);
  std::vector<double> f(n), df(n), d2f(n);
  for (std::size_t j = 0; j < n; ++j) {
    f[j] = std::sin(3.0 * a[j]) + 0.5 * std::cos(7.0 * a[j]);
    df[j] = 3.0 * std::cos(3.0 * a[j]) - 3.5 * std::sin(7.0 * a[j]);
    d2f[j] = -9.0 * std::sin(3.0 * a[j]) - 24.5 * std::cos(7.0 * a[j]);
  }
  CHECK(maxAbsDiff(sp::derivativeAlpha(f), df) < 1e-11);
  CHECK(maxAbsDiff(sp::derivativeAlpha(f, 2), d2f) < 1e-10);
}

TEST_CASE("odd-order derivatives zero the Nyquist slot and stay real") {
  const std::size_t n = 32;
  std::vector<double> f(n);
  for (std::size_t j = 0; j < n; ++j) f[j] = (j % 2 == 0) ? 1.0 : -1.0;
  std::vector<cd> d = sp::derivativeAlpha(sp::toComplex(f), 1);
  for (const cd& v : d) CHECK(std::abs(v) < 1e-12);
}

TEST_CASE("arc-length derivative rescales by 2*pi/L") {
  const std::size_t n = 64;
  const double L = 4.0 * kPi;
  std::vector<double> a = gridAlpha(n);
  std::vector<double> f(n), want(n);
  for (std::size_t j = 0; j < n; ++j) {
    f[j] = std::cos(2.0 * a[j]);
    want[j] = -2.0 * (kTwoPi / L) * std::sin(2.0 * a[j]);
  }
  CHECK(maxAbsDiff(sp::derivativeS(f, 1, L), want) < 1e-12);
}

TEST_CASE("Hilbert transform maps cos to sin and sin to -cos") {
  const std::size_t n = 64;
  std::vector<double> a = gridAlpha(n);
  std::vector<double> c(n), s(n), mc(n);
  for (std::size_t j = 0; j < n; ++j) {
    c[j] = std::cos(2.0 * a[j]);
    s[j] = std::sin(2.0 * a[j]);
    mc[j] = -std::cos(2.0 * a[j]);
  }
  CHECK(maxAbsDiff(sp::hilbert(c), s) < 1e-12);
  CHECK(maxAbsDiff(sp::hilbert(s), mc) < 1e-12);
}

TEST_CASE("H(H(f)) = -(f - mean f) on arbitrary fields, Nyquist included") {
  const std::size_t n = 128;
  std::vector<cd> f = randomComplexField(n, 11u);
  std::vector<cd> hh = sp::hilbert(sp::hilbert(f));
  cd mean = sp::meanValue(f);
  std::vector<cd> want(n);
  for (std::size_t j = 0; j < n; ++j) want[j] = -(f[j] - mean);
  CHECK(maxAbsDiff(hh, want) < 1e-12);
}

TEST_CASE("D has symbol |k| * 2*pi/L and agrees with H d/ds") {
  const std::size_t n = 64;
  const double L = 3.0;
  std::vector<double> a = gridAlpha(n);
  std::vector<double> f(n), want(n);
  for (std::size_t j = 0; j < n; ++j) {
    f[j] = std::cos(3.0 * a[j]) + 0.25 * std::sin(5.0 * a[j]);
    want[j] = (kTwoPi / L) * (3.0 * std::cos(3.0 * a[j]) +
                              1.25 * std::sin(5.0 * a[j]));
  }
  CHECK(maxAbsDiff(sp::applyD(f, L), want) < 1e-11);

  std::vector<double> g = randomRealFieldNoNyquist(n, 13u);
  CHECK(maxAbsDiff(sp::applyD(g, L), sp::hilbert(sp::derivativeS(g, 1, L))) <
        1e-10);
}

TEST_CASE("D is self-adjoint and nonnegative in the ds inner product") {
  const std::size_t n = 64;
  const double L = 5.0;
  std::vector<double> f = randomRealFieldNoNyquist(n, 17u);
  std::vector<double> g = randomRealFieldNoNyquist(n, 19u);
  double lhs = sp::innerDs(sp::applyD(f, L), g, L);
  double rhs = sp::innerDs(f, sp::applyD(g, L), L);
  CHECK(std::abs(lhs - rhs) < 1e-10);
  CHECK(sp::innerDs(sp::applyD(f, L), f, L) >= -1e-12);
}

TEST_CASE("Hilbert transform is skew-adjoint in the ds inner product") {
  const std::size_t n = 64;
  const double L = 2.5;
  std::vector<double> f = randomRealFieldNoNyquist(n, 23u);
  std::vector<double> g = randomRealFieldNoNyquist(n, 29u);
  double lhs = sp::innerDs(sp::hilbert(f), g, L);
  double rhs = sp::innerDs(f, sp::hilbert(g), L);
  CHECK(std::abs(lhs + rhs) < 1e-10);
}

TEST_CASE("Sobolev norm matches closed forms on single modes") {
  const std::size_t n = 64;
  const double L = kTwoPi;
  std::vector<double> a = gridAlpha(n);
  std::vector<double> c1(n);
  for (std::size_t j = 0; j < n; ++j) c1[j] = std::cos(a[j]);
  // |fhat_{+-1}|^2 = 1/4 each: r = 0 gives sqrt(pi), r = 1 gives sqrt(2 pi).
  CHECK(sp::sobolevNorm(c1, 0.0, L) == doctest::Approx(std::sqrt(kPi)));
  CHECK(sp::sobolevNorm(c1, 1.0, L) == doctest::Approx(std::sqrt(2.0 * kPi)));
  // Half-integer orders interpolate monotonically.
  double h = sp::sobolevNorm(c1, 0.5, L);
  CHECK(h > sp::sobolevNorm(c1, 0.0, L));
  CHECK(h < sp::sobolevNorm(c1, 1.0, L));
}

TEST_CASE("Sobolev norm of order 0 matches the ds inner product") {
  const std::size_t n = 64;
  const double L = 3.7;
  std::vector<double> f = randomRealFieldNoNyquist(n, 31u);
  double viaNorm = sp::sobolevNorm(f, 0.0, L);
  double viaInner = std::sqrt(sp::innerDs(f, f, L));
  CHECK(viaNorm == doctest::Approx(viaInner).epsilon(1e-12));
}

TEST_CASE("antiderivative inverts the alpha derivative on mean-zero fields") {
  const std::size_t n = 64;
  std::vector<double> f = randomRealFieldNoNyquist(n, 37u);
  double mean = sp::meanValue(f);
  for (double& v : f) v -= mean;
  std::vector<double> g = sp::derivativeAlpha(sp::antiderivativeAlpha(f));
  CHECK(maxAbsDiff(g, f) < 1e-10);
  // The antiderivative itself has zero mean.
  CHECK(std::abs(sp::meanValue(sp::antiderivativeAlpha(f))) < 1e-12);
}

TEST_CASE("trigonometric resampling is exact on band-limited data") {
  const std::size_t n = 32, m = 96;
  std::vector<double> a = gridAlpha(n), am = gridAlpha(m);
  std::vector<double> f(n), wantUp(m);
  for (std::size_t j = 0; j < n; ++j) {
    f[j] = std::cos(3.0 * a[j]) + 0.2 * std::sin(5.0 * a[j]);
  }
  for (std::size_t j = 0; j < m; ++j) {
    wantUp[j] = std::cos(3.0 * am[j]) + 0.2 * std::sin(5.0 * am[j]);
  }
  std::vector<double> up = sp::resample(f, m);
  CHECK(maxAbsDiff(up, wantUp) < 1e-12);
  std::vector<double> back = sp::resample(up, n);
  CHECK(maxAbsDiff(back, f) < 1e-12);
}

TEST_CASE("resampling round-trips fields with Nyquist content") {
  const std::size_t n = 32;
  std::vector<double> f(n);
  for (std::size_t j = 0; j < n; ++j) {
    f[j] = 0.3 * ((j % 2 == 0) ? 1.0 : -1.0) + std::cos(2.0 * kTwoPi * j / n);
  }
  std::vector<double> back = sp::resample(sp::resample(f, 2 * n), n);
  CHECK(maxAbsDiff(back, f) < 1e-12);
}

TEST_CASE("two-thirds dealiasing keeps low modes and kills high ones") {
  const std::size_t n = 32;  // modes with |k| > 10 are removed
  std::vector<double> a = gridAlpha(n);
  std::vector<double> f(n), want(n);
  for (std::size_t j = 0; j < n; ++j) {
    f[j] = std::cos(10.0 * a[j]) + std::sin(11.0 * a[j]) +
           0.5 * ((j % 2 == 0) ? 1.0 : -1.0);
    want[j] = std::cos(10.0 * a[j]);
  }
  sp::dealias23(f);
  CHECK(maxAbsDiff(f, want) < 1e-12);
}

TEST_CASE("innerDs weights by L/n") {
  const std::size_t n = 16;
  const double L = 3.0;
  std::vector<double> ones(n, 1.0);
  CHECK(sp::innerDs(ones, ones, L) == doctest::Approx(L));
}
