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
#include <complex>
#include <vector>

#include "gcwave/birkhoff_rott.hpp"
#include "gcwave/common.hpp"
#include "gcwave/curve.hpp"
#include "gcwave/dynamics.hpp"
#include "gcwave/fields.hpp"
#include "gcwave/spectral.hpp"
#include "support/oracles.hpp"

using namespace gcwave;
namespace sp = gcwave::spectral;
namespace tg = gcwave::testing;

namespace {

double maxAbs(const std::vector<double>& a) {
  double m = 0.0;
  for (double v : a) m = std::max(m, std::abs(v));
  return m;
}

double maxAbsDiff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    m = std::max(m, std::abs(a[j] - b[j]));
  }
  return m;
}

double stateDistance(const State& a, const State& b) {
  return maxAbsDiff(a.theta, b.theta) + maxAbsDiff(a.gamma, b.gamma) +
         std::abs(a.L - b.L);
}

State flatState(std::size_t n) {
  State s;
  s.theta.assign(n, 0.0);
  s.gamma.assign(n, 0.0);
  s.L = kTwoPi;
  return s;
}

// Integrate with repeated stepOnce (self-starting schemes).
State march(State s, double dt, int steps, const StepOptions& o) {
  for (int i = 0; i < steps; ++i) s = stepOnce(s, dt, o);
  return s;
}

// Least-squares slope of y against x.
double fitSlope(const std::vector<double>& x, const std::vector<double>& y) {
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= x.size();
  my /= y.size();
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    num += (x[i] - mx) * (y[i] - my);
    den += (x[i] - mx) * (x[i] - mx);
  }
  return num / den;
}

struct Window {
  State prev, mid, next;
};

// Centered audit window built by one exponential step each way, with
// the projection and truncation filters off so the finite differences
// see the raw flow.
Window makeWindow(const State& mid, double dt) {
  StepOptions o;
  o.project = false;
  o.dealias = false;
  Window w;
  w.mid = mid;
  w.prev = stepOnce(mid, -dt, o);
  w.next = stepOnce(mid, dt, o);
  return w;
}

}  // namespace

TEST_CASE("flat rest: all rates vanish") {
  State s = flatState(64);
  RhsBundle b = kinematicRhs(s);
  CHECK(maxAbs(b.thetaT) <= 1e-12);
  CHECK(maxAbs(b.gammaT) <= 1e-12);
  CHECK(std::abs(b.Lt) <= 1e-13);
  CHECK(b.minA == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("flat rest is a fixed point of every scheme") {
  State s0 = flatState(64);

  StepOptions etd;
  State s = march(s0, 1e-2, 1000, etd);
  CHECK(stateDistance(s, s0) <= 1e-12);

  StepOptions rk4;
  rk4.scheme = Scheme::ExplicitRk4;
  s = march(s0, 1e-2, 50, rk4);
  CHECK(stateDistance(s, s0) <= 1e-12);

  StepOptions bdf;
  bdf.scheme = Scheme::ImexBdf2;
  Integrator ig(s0, 1e-2, bdf);
  for (int i = 0; i < 100; ++i) ig.step();
  CHECK(stateDistance(ig.state(), s0) <= 1e-12);
}

TEST_CASE("flat with uniform gamma is a fixed point") {
  const std::size_t n = 64;
  State s0 = flatState(n);
  s0.gamma.assign(n, 0.6);

  RhsBundle b = kinematicRhs(s0);
  CHECK(maxAbs(b.thetaT) <= 1e-12);
  CHECK(maxAbs(b.gammaT) <= 1e-12);
  CHECK(std::abs(b.Lt) <= 1e-13);

  State s = march(s0, 1e-2, 200, StepOptions{});
  CHECK(maxAbs(s.theta) <= 1e-12);
  CHECK(std::abs(s.L - kTwoPi) <= 1e-12);
  std::vector<double> c(n, 0.6);
  CHECK(maxAbsDiff(s.gamma, c) <= 1e-12);
}

TEST_CASE("block exponential matches its Taylor series") {
  const double g = 1.0;
  for (double ks : {0.0, 1.0, -2.0, 7.0}) {
    Mat2 a = linearBlock(ks, g);
    const double h = 1e-4;
    Mat2 e = blockExp(h, ks, g);
    // Taylor series with A^2 = (m01*m10) I for this block: the diagonal
    // collects the even powers, the off-diagonal the odd ones.
    double a2 = a.m01 * a.m10;
    double diag = 1.0 + 0.5 * h * h * a2 + h * h * h * h * a2 * a2 / 24.0;
    double odd = 1.0 + h * h * a2 / 6.0;
    CHECK(std::abs(e.m00 - diag) <= 1e-12);
    CHECK(std::abs(e.m01 - h * a.m01 * odd) <= 1e-12);
    CHECK(std::abs(e.m10 - h * a.m10 * odd) <= 1e-12);
    CHECK(std::abs(e.m11 - diag) <= 1e-12);
    // Exact inverse under time reversal.
    Mat2 eb = blockExp(-h, ks, g);
    CHECK(std::abs(e.m00 * eb.m00 + e.m01 * eb.m10 - 1.0) <= 1e-14);
    CHECK(std::abs(e.m00 * eb.m01 + e.m01 * eb.m11) <= 1e-14);
  }
  // Gravity off: the k = 0 block is identically zero.
  Mat2 z = blockExp(0.0, 0.0, 0.0);
  CHECK(z.m00 == doctest::Approx(1.0));
  CHECK(z.m10 == doctest::Approx(0.0));
}

TEST_CASE("linearized rates reproduce the per-mode block") {
  const std::size_t n = 64;
  const double eps = 1e-6;
  for (int k : {2, 3}) {
    // Column 1: pure theta perturbation, gamma = 0.
    State s = flatState(n);
    std::vector<double> grid = alphaGrid(n);
    for (std::size_t j = 0; j < n; ++j) s.theta[j] = eps * std::cos(k * grid[j]);
    closureProject(s);
    RhsBundle b = kinematicRhs(s);
    CHECK(maxAbs(b.thetaT) <= 1e-13);  // gamma = 0 means W = 0 exactly
    double ks = kTwoPi * k / s.L;
    cd thetaHatK = sp::fft(sp::toComplex(s.theta))[k];
    cd gammaRateK = sp::fft(sp::toComplex(b.gammaT))[k];
    cd expected = -2.0 * (ks * ks + 1.0) * thetaHatK;
    CHECK(std::abs(gammaRateK - expected) <= 0.01 * std::abs(expected));

    // Column 2: pure gamma perturbation on the exactly flat curve.
    State s2 = flatState(n);
    for (std::size_t j = 0; j < n; ++j) {
      s2.gamma[j] = eps * std::cos(k * grid[j]);
    }
    RhsBundle b2 = kinematicRhs(s2);
    cd gammaHatK = sp::fft(sp::toComplex(s2.gamma))[k];
    cd thetaRateK = sp::fft(sp::toComplex(b2.thetaT))[k];
    cd expectedTheta = 0.5 * std::abs(static_cast<double>(k)) * gammaHatK;
    CHECK(std::abs(thetaRateK - expectedTheta) <=
          0.01 * std::abs(expectedTheta));
    cd gammaRate2K = sp::fft(sp::toComplex(b2.gammaT))[k];
    double rateScale = std::sqrt(std::pow(std::abs(ks), 3) + std::abs(ks)) *
                       std::abs(gammaHatK);
    CHECK(std::abs(gammaRate2K) <= 0.01 * rateScale);
  }
}

TEST_CASE("travelling mode oscillates at the dispersion frequency") {
  const std::size_t n = 64;
  const int k = 2;
  State s = initialWave(n, k, 1e-3, 1.0);
  const double dt = 5e-3;
  const int steps = 800;
  StepOptions o;

  std::vector<double> times, phases;
  double last = 0.0, accum = 0.0;
  for (int i = 0; i <= steps; ++i) {
    cd hat = sp::fft(sp::toComplex(s.theta))[k];
    double ph = std::arg(hat);
    if (i == 0) {
      accum = ph;
    } else {
      double d = ph - last;
      while (d > kPi) d -= kTwoPi;
      while (d < -kPi) d += kTwoPi;
      accum += d;
    }
    last = ph;
    times.push_back(s.t);
    phases.push_back(accum);
    if (i < steps) s = stepOnce(s, dt, o);
  }
  double omega = std::abs(fitSlope(times, phases));
  double target = std::sqrt(10.0);
  CHECK(std::abs(omega - target) <= 0.01 * target);
}

TEST_CASE("etd_rk2 self-convergence is second order") {
  State s0 = initialWave(64, 2, 0.02, 1.0);
  const double T = 0.2;
  StepOptions o;
  State a = march(s0, T / 10.0, 10, o);
  State b = march(s0, T / 20.0, 20, o);
  State c = march(s0, T / 40.0, 40, o);
  double e1 = stateDistance(a, b);
  double e2 = stateDistance(b, c);
  double order = std::log2(e1 / e2);
  CHECK(order >= 1.9);
  CHECK(order <= 2.8);
}

TEST_CASE("imex_bdf2 self-convergence is near second order") {
  State s0 = initialWave(64, 2, 0.02, 1.0);
  const double T = 0.2;
  auto runBdf = [&](int steps) {
    StepOptions o;
    o.scheme = Scheme::ImexBdf2;
    Integrator ig(s0, T / steps, o);
    for (int i = 0; i < steps; ++i) ig.step();
    return ig.state();
  };
  State a = runBdf(20);
  State b = runBdf(40);
  State c = runBdf(80);
  double order = std::log2(stateDistance(a, b) / stateDistance(b, c));
  CHECK(order >= 1.5);
  CHECK(order <= 2.8);
}

TEST_CASE("explicit_rk4 agrees with etd_rk2 within combined truncation") {
  State s0 = initialWave(64, 2, 0.02, 1.0);
  const double T = 0.1;
  const double h = 0.01;  // below the dispersive limit at N = 64
  StepOptions etd;
  StepOptions rk4;
  rk4.scheme = Scheme::ExplicitRk4;

  State ye = march(s0, h, 10, etd);
  State ye2 = march(s0, 0.5 * h, 20, etd);
  State yr = march(s0, h, 10, rk4);
  State yr2 = march(s0, 0.5 * h, 20, rk4);
  (void)T;

  double errEtd = stateDistance(ye, ye2) * (4.0 / 3.0);
  double errRk4 = stateDistance(yr, yr2) * (16.0 / 15.0);
  CHECK(stateDistance(ye, yr) <= 2.0 * (errEtd + errRk4) + 1e-12);
}

TEST_CASE("rk4 rejects time steps above the dispersive limit") {
  State s0 = initialWave(64, 2, 1e-3, 1.0);
  StepOptions o;
  o.scheme = Scheme::ExplicitRk4;
  CHECK_THROWS_AS(static_cast<void>(stepOnce(s0, 0.5, o)), Error);
}

TEST_CASE("closure integrals are conserved along a long run") {
  const std::size_t n = 32;
  State s = initialWave(n, 1, 0.01, 1.0);

  // Rate-level identity: d/dt integral cos(theta) ds = 0.
  RhsBundle b = kinematicRhs(s);
  double meanCos = 0.0, meanSinRate = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    meanCos += std::cos(s.theta[j]);
    meanSinRate += std::sin(s.theta[j]) * b.thetaT[j];
  }
  meanCos /= n;
  meanSinRate /= n;
  CHECK(std::abs(b.Lt * meanCos - s.L * meanSinRate) <= 1e-8);

  StepOptions o;
  for (int i = 0; i < 10000; ++i) s = stepOnce(s, 1e-3, o);
  CHECK(std::abs(closureDefect(s)) <= 1e-8);
  CHECK(std::isfinite(s.L));
}

TEST_CASE("delta rate audit: centered difference matches the identity") {
  const std::size_t n = 64;
  const double g = 1.0;
  State mid = initialWave(n, 2, 0.02, g);
  const double dt = 5e-4;
  Window w = makeWindow(mid, dt);

  auto deltaT = [&](const State& st, std::vector<double>& delta,
                    std::vector<double>& tfield) {
    KernelWorkspace ws = makeWorkspace(st);
    DerivedFields der = computeDerived(st, ws);
    delta = der.delta;
    tfield = der.T;
  };
  std::vector<double> dPrev, tPrev, dNext, tNext;
  deltaT(w.prev, dPrev, tPrev);
  deltaT(w.next, dNext, tNext);

  KernelWorkspace ws = makeWorkspace(mid);
  DerivedFields der = computeDerived(mid, ws);
  std::vector<double> thetaT = kinematicThetaT(mid, der);
  std::vector<double> thetaSS = sp::derivativeS(mid.theta, 2, mid.L);
  std::vector<double> util = utilde(mid, der);

  double worst = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double fd = (dNext[j] - dPrev[j]) / (2.0 * dt);
    double fdT = (tNext[j] - tPrev[j]) / (2.0 * dt);
    double rhs = thetaSS[j] - der.delta[j] * util[j] -
                 g * std::sin(mid.theta[j]) + der.U[j] * thetaT[j] - fdT;
    worst = std::max(worst, std::abs(fd - rhs));
  }
  CHECK(worst <= 1e-6);
}

TEST_CASE("quasilinear u_t matches the trajectory difference") {
  const std::size_t n = 64;
  State mid = initialWave(n, 2, 0.02, 1.0);
  const double dt = 5e-4;
  Window w = makeWindow(mid, dt);

  auto utilOf = [&](const State& st) {
    KernelWorkspace ws = makeWorkspace(st);
    DerivedFields der = computeDerived(st, ws);
    return utilde(st, der);
  };
  std::vector<double> uPrev = utilOf(w.prev);
  std::vector<double> uNext = utilOf(w.next);

  RhsBundle b = quasilinearRhs(mid);
  double worst = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double fd = (uNext[j] - uPrev[j]) / (2.0 * dt);
    worst = std::max(worst, std::abs(fd - b.uT[j]));
  }
  CHECK(worst <= 1e-6);
}

TEST_CASE("quasilinear theta_t agrees with the kinematic value") {
  State s = initialWave(128, 2, 0.01, 1.0);
  RhsBundle b = quasilinearRhs(s);
  double num = 0.0, den = 0.0;
  for (std::size_t j = 0; j < s.n(); ++j) {
    double d = b.thetaT[j] - b.thetaTKinematic[j];
    num += d * d;
    den += b.thetaTKinematic[j] * b.thetaTKinematic[j];
  }
  CHECK(std::sqrt(num / den) <= 1e-4);
}

TEST_CASE("analytic kernel rate matches the advected-node oracle") {
  const std::size_t n = 128;
  State s = initialWave(n, 2, 0.01, 1.0);
  // Add a second gamma mode so the density is not an eigenfunction.
  std::vector<double> grid = alphaGrid(n);
  for (std::size_t j = 0; j < n; ++j) {
    s.gamma[j] += 0.004 * std::cos(3.0 * grid[j]);
  }

  KernelWorkspace ws = makeWorkspace(s);
  DerivedFields der = computeDerived(s, ws);
  std::vector<double> thetaT = kinematicThetaT(s, der);
  std::vector<cd> vel = nodeVelocity(s, der);
  std::vector<double> half(n);
  for (std::size_t j = 0; j < n; ++j) half[j] = 0.5 * s.gamma[j];

  std::vector<double> analytic =
      adjointLayerTimeDerivative(ws, thetaT, der.Lt, vel, half);

  std::vector<double> fd = tg::adjointLayerFd(s, vel, thetaT, half, 1e-5);
  double scale = maxAbs(analytic);
  CHECK(scale > 0.0);
  CHECK(maxAbsDiff(analytic, fd) <= 1e-6 * scale);

  // The centered oracle converges at second order in its spacing.
  std::vector<double> c1 = tg::adjointLayerFd(s, vel, thetaT, half, 4e-3);
  std::vector<double> c2 = tg::adjointLayerFd(s, vel, thetaT, half, 2e-3);
  double e1 = maxAbsDiff(analytic, c1);
  double e2 = maxAbsDiff(analytic, c2);
  CHECK(e1 / e2 >= 3.0);
  CHECK(e1 / e2 <= 5.0);
}

TEST_CASE("taylor sign matches the momentum finite-difference oracle") {
  const std::size_t n = 64;
  const double g = 1.0;
  State mid = initialWave(n, 2, 0.02, g);
  const double dt = 2.5e-4;
  Window w = makeWindow(mid, dt);

  auto velocity = [&](const State& st) {
    KernelWorkspace ws = makeWorkspace(st);
    DerivedFields der = computeDerived(st, ws);
    std::vector<cd> W(st.n());
    for (std::size_t j = 0; j < st.n(); ++j) W[j] = std::conj(der.Wbar[j]);
    return W;
  };
  std::vector<cd> wPrev = velocity(w.prev);
  std::vector<cd> wNext = velocity(w.next);

  KernelWorkspace ws = makeWorkspace(mid);
  DerivedFields der = computeDerived(mid, ws);
  std::vector<cd> wMid(n);
  for (std::size_t j = 0; j < n; ++j) wMid[j] = std::conj(der.Wbar[j]);
  std::vector<cd> wS = sp::derivativeS(wMid, 1, mid.L);
  std::vector<double> a = taylorSign(mid, der, ws, g);

  double worst = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    cd dtW = (wNext[j] - wPrev[j]) / (2.0 * dt) + der.delta[j] * wS[j];
    cd tangentBar = std::polar(1.0, -mid.theta[j]);
    double oracle = (tangentBar * (dtW + cd(0.0, g))).imag();
    worst = std::max(worst, std::abs(a[j] - oracle));
  }
  CHECK(worst <= 1e-6);
}

TEST_CASE("quasilinear mode integrates alongside the kinematic mode") {
  State s0 = initialWave(64, 2, 1e-3, 1.0);
  StepOptions kin;
  StepOptions quasi;
  quasi.mode = EvolutionMode::Quasilinear;
  State a = march(s0, 5e-3, 20, kin);
  State b = march(s0, 5e-3, 20, quasi);
  CHECK(stateDistance(a, b) <= 1e-7);
}

TEST_CASE("aborts: non-finite states and collapsing geometry") {
  State bad = flatState(32);
  bad.theta[3] = std::nan("");
  CHECK_THROWS_AS(static_cast<void>(stepOnce(bad, 1e-3, StepOptions{})),
                  Error);

  State curved = initialWave(64, 2, 0.3, 1.0);
  StepOptions tight;
  tight.rhs.chordArcFloor = 0.999;
  CHECK_THROWS_AS(static_cast<void>(stepOnce(curved, 1e-3, tight)), Error);

  // Zero gravity makes a vanish identically on the flat rest state, so
  // the Taylor-sign abort fires at once.
  State rest = flatState(32);
  StepOptions g0;
  g0.rhs.gravity = 0.0;
  CHECK_THROWS_AS(static_cast<void>(stepOnce(rest, 1e-3, g0)), Error);
}

TEST_CASE("initial wave data is closed and on the travelling branch") {
  State s = initialWave(64, 2, 1e-3, 1.0);
  CHECK(std::abs(closureDefect(s)) <= 1e-10);
  double ks = kTwoPi * 2.0 / s.L;
  double omega = std::sqrt(std::abs(ks) * (ks * ks + 1.0));
  double expect = 2.0 * omega / std::abs(ks) * 1e-3;
  CHECK(maxAbs(s.gamma) == doctest::Approx(expect).epsilon(1e-6));
}
