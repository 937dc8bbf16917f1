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

#include "gcwave/energy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <utility>

#include "gcwave/birkhoff_rott.hpp"
#include "gcwave/dynamics.hpp"
#include "gcwave/spectral.hpp"

namespace gcwave {

namespace sp = spectral;

namespace {

std::vector<double> pointwise(const std::vector<double>& w,
                              const std::vector<double>& f) {
  std::vector<double> out(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) out[j] = w[j] * f[j];
  return out;
}

double supNorm(const std::vector<double>& f) {
  double s = 0.0;
  for (double v : f) s = std::max(s, std::abs(v));
  return s;
}

}  // namespace

std::vector<double> EnergyReport::flattened() const {
  std::vector<double> out;
  out.reserve(5 + gammaTerms.size() + ek1.size() + ek2.size() + ek3.size());
  out.push_back(baseTheta);
  out.push_back(baseDelta);
  out.push_back(baseGamma);
  out.push_back(baseU);
  out.push_back(baseL2);
  out.insert(out.end(), gammaTerms.begin(), gammaTerms.end());
  out.insert(out.end(), ek1.begin(), ek1.end());
  out.insert(out.end(), ek2.begin(), ek2.end());
  out.insert(out.end(), ek3.begin(), ek3.end());
  return out;
}

std::vector<std::string> energySubTermNames(std::size_t r) {
  std::vector<std::string> names = {"E_theta", "E_delta", "E_gamma", "E_u",
                                    "E_L2"};
  for (std::size_t k = 1; k < r; ++k)
    names.push_back("E_gamma_d" + std::to_string(k));
  for (std::size_t k = 1; k <= r; ++k)
    names.push_back("E1_" + std::to_string(k));
  for (std::size_t k = 1; k <= r; ++k)
    names.push_back("E2_" + std::to_string(k));
  for (std::size_t k = 1; k <= r; ++k)
    names.push_back("E3_" + std::to_string(k));
  return names;
}

EnergyReport energy(const State& state, const DerivedFields& derived,
                    const std::vector<double>& a, std::size_t r,
                    double thetaS0Sup) {
  const std::size_t n = state.n();
  if (n == 0) throwInput("energy: empty state");
  if (r < 4) throwInput("energy: derivative count r must be at least 4");
  if (derived.delta.size() != n || derived.u.size() != n || a.size() != n ||
      state.gamma.size() != n) {
    throwInput("energy: field sizes disagree with the state");
  }
  const double L = state.L;

  EnergyReport rep;
  rep.t = state.t;
  rep.r = r;
  rep.thetaS0Sup = thetaS0Sup;
  rep.baseTheta = sp::innerDs(state.theta, state.theta, L);
  rep.baseDelta = sp::innerDs(derived.delta, derived.delta, L);
  rep.baseGamma = sp::innerDs(state.gamma, state.gamma, L);
  rep.baseU = sp::innerDs(derived.u, derived.u, L);
  rep.baseL2 = L * L;

  rep.gammaTerms.resize(r - 1);
  for (std::size_t k = 1; k < r; ++k) {
    std::vector<double> dg =
        sp::derivativeS(state.gamma, static_cast<int>(k), L);
    rep.gammaTerms[k - 1] = sp::innerDs(dg, dg, L);
  }

  std::vector<double> thetaS = sp::derivativeS(state.theta, 1, L);
  std::vector<double> w(n);
  double wMin = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < n; ++j) {
    w[j] = 10.0 * thetaS0Sup - thetaS[j];
    wMin = std::min(wMin, w[j]);
  }
  rep.e2SignWarning = wMin < 0.0;

  rep.ek1.resize(r);
  rep.ek2.resize(r);
  rep.ek3.resize(r);
  for (std::size_t k = 1; k <= r; ++k) {
    std::vector<double> dkTheta =
        sp::derivativeS(state.theta, static_cast<int>(k), L);
    std::vector<double> dk1Theta =
        sp::derivativeS(state.theta, static_cast<int>(k) + 1, L);
    std::vector<double> dkm1U =
        k == 1 ? derived.u
               : sp::derivativeS(derived.u, static_cast<int>(k) - 1, L);
    rep.ek1[k - 1] = 0.5 * (sp::innerDs(dk1Theta, dk1Theta, L) +
                            sp::innerDs(pointwise(a, dkTheta), dkTheta, L) +
                            sp::innerDs(dkm1U, sp::applyD(dkm1U, L), L));
    rep.ek2[k - 1] = sp::innerDs(dkm1U, pointwise(w, dkm1U), L);
    rep.ek3[k - 1] =
        10.0 * thetaS0Sup * sp::innerDs(dkTheta, sp::applyD(dkTheta, L), L);
  }

  double total =
      rep.baseTheta + rep.baseDelta + rep.baseGamma + rep.baseU + rep.baseL2;
  for (double v : rep.gammaTerms) total += v;
  for (double v : rep.ek1) total += v;
  for (double v : rep.ek2) total += v;
  for (double v : rep.ek3) total += v;
  rep.total = total;
  return rep;
}

RateAuditResult energyRateAudit(const std::vector<double>& t,
                                const std::vector<double>& E) {
  const std::size_t m = t.size();
  if (E.size() != m) throwInput("energyRateAudit: t and E lengths differ");
  if (m < 20) throwInput("energyRateAudit: need at least 20 samples");
  for (std::size_t i = 0; i < m; ++i) {
    if (!std::isfinite(t[i]) || !std::isfinite(E[i]))
      throwInput("energyRateAudit: non-finite sample");
    if (E[i] < 0.0) throwInput("energyRateAudit: negative energy sample");
  }
  const double dt = t[1] - t[0];
  if (!(dt > 0.0)) throwInput("energyRateAudit: time must increase");
  for (std::size_t i = 0; i + 1 < m; ++i) {
    if (std::abs(t[i + 1] - t[i] - dt) > 1e-6 * dt)
      throwInput("energyRateAudit: samples must be uniformly spaced");
  }

  std::vector<double> edot(m - 2);
  double maxAbs = 0.0;
  double maxRatio = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i + 1 < m; ++i) {
    const double d = (E[i + 1] - E[i - 1]) / (2.0 * dt);
    edot[i - 1] = d;
    maxAbs = std::max(maxAbs, std::abs(d));
    const double e = E[i];
    maxRatio = std::max(maxRatio, d / (1.0 + e * (1.0 + e * (1.0 + e))));
  }

  RateAuditResult res;
  res.maxRatio = maxRatio;
  if (maxAbs <= 1e-9) {
    res.degree = 0;
    res.coefficient = 0.0;
    res.pass = true;
    return res;
  }
  double c = 0.0;
  for (int deg = 0; deg <= 3; ++deg) {
    c = 0.0;
    for (std::size_t i = 1; i + 1 < m; ++i) {
      double denom = 1.0;
      double pow = 1.0;
      for (int j = 1; j <= deg; ++j) {
        pow *= E[i];
        denom += pow;
      }
      c = std::max(c, edot[i - 1] / denom);
    }
    if (c <= 1e6) {
      res.degree = deg;
      res.coefficient = c;
      res.pass = true;
      return res;
    }
  }
  res.degree = 3;
  res.coefficient = c;
  res.pass = false;
  return res;
}

std::vector<EstimateRow> estimateRows(const State& state, std::size_t r,
                                      double gravity) {
  const std::size_t n = state.n();
  if (n == 0) throwInput("estimateRows: empty state");
  const double L = state.L;
  const double rr = static_cast<double>(r);

  KernelWorkspace ws = makeWorkspace(state);
  DerivedFields der = computeDerived(state, ws);
  std::vector<double> a = taylorSign(state, der, ws, gravity);
  std::vector<double> thetaT = kinematicThetaT(state, der);

  EnergyReport rep =
      energy(state, der, a, r,
             supNorm(sp::derivativeS(state.theta, 1, L)));
  const double E = rep.total;
  const double pe = 1.0 + E * (1.0 + E * (1.0 + E));

  auto makeRow = [](const char* name, double lhs, double rhs) {
    EstimateRow row;
    row.name = name;
    row.lhs = lhs;
    row.rhs = rhs;
    if (lhs == 0.0) {
      row.ratio = 0.0;
    } else if (rhs == 0.0) {
      row.ratio = std::numeric_limits<double>::infinity();
    } else {
      row.ratio = lhs / rhs;
    }
    return row;
  };

  std::vector<EstimateRow> rows;
  rows.reserve(7);

  rows.push_back(makeRow(
      "remainder_gamma",
      sp::sobolevNorm(remainderR(state.gamma, ws), rr, L), pe));

  rows.push_back(makeRow(
      "commutator_exp2itheta",
      sp::sobolevNorm(commutatorExp2itheta(der.Wbar, ws), rr, L), pe));

  std::vector<cd> W(n);
  for (std::size_t j = 0; j < n; ++j) W[j] = std::conj(der.Wbar[j]);
  rows.push_back(makeRow(
      "commutator_velocity",
      sp::sobolevNorm(commutatorVelocity(W, sp::toComplex(der.u), ws), rr, L),
      pe));

  rows.push_back(makeRow(
      "phi_residual",
      sp::sobolevNorm(phiError(state, der, thetaT, ws), rr, L), pe));

  rows.push_back(makeRow(
      "psi_residual",
      sp::sobolevNorm(psiError(state, der, thetaT), rr - 0.5, L), pe));

  std::vector<double> drGamma =
      sp::derivativeS(state.gamma, static_cast<int>(r), L);
  std::vector<double> comm = sp::hilbert(pointwise(der.delta, drGamma));
  {
    std::vector<double> hg = sp::hilbert(drGamma);
    for (std::size_t j = 0; j < n; ++j) comm[j] -= der.delta[j] * hg[j];
  }
  rows.push_back(makeRow(
      "hilbert_delta_comm", sp::sobolevNorm(comm, 0.5, L),
      sp::sobolevNorm(der.delta, rr + 0.5, L) *
          sp::sobolevNorm(state.gamma, rr - 0.5, L)));

  rows.push_back(makeRow(
      "product_algebra",
      sp::sobolevNorm(pointwise(state.theta, state.gamma), rr - 1.0, L),
      sp::sobolevNorm(state.theta, rr, L) *
          sp::sobolevNorm(state.gamma, rr - 1.0, L)));

  return rows;
}

std::vector<EstimateRow> estimateAudit(std::size_t n, std::size_t r,
                                       std::uint64_t seed,
                                       std::size_t ensemble, double gravity) {
  if (ensemble == 0) throwInput("estimateAudit: ensemble must be positive");
  std::mt19937_64 rng(seed);
  // Uniform in [-1, 1] from the top 53 bits, identical on every
  // platform (std::uniform_real_distribution is not portable).
  auto uniform = [&rng]() {
    return 2.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53) - 1.0;
  };

  std::vector<EstimateRow> best;
  for (std::size_t member = 0; member < ensemble; ++member) {
    State state;
    state.theta.assign(n, 0.0);
    state.gamma.assign(n, 0.0);
    state.L = kTwoPi;
    for (int k = 1; k <= 4; ++k) {
      const double scale = 0.03 / static_cast<double>(k);
      const double tc = scale * uniform();
      const double ts = scale * uniform();
      const double gc = scale * uniform();
      const double gs = scale * uniform();
      for (std::size_t j = 0; j < n; ++j) {
        const double phase = static_cast<double>(k) * kTwoPi *
                             static_cast<double>(j) / static_cast<double>(n);
        state.theta[j] += tc * std::cos(phase) + ts * std::sin(phase);
        state.gamma[j] += gc * std::cos(phase) + gs * std::sin(phase);
      }
    }
    closureProject(state);

    std::vector<EstimateRow> rows = estimateRows(state, r, gravity);
    if (best.empty()) {
      best = std::move(rows);
    } else {
      for (std::size_t i = 0; i < best.size(); ++i) {
        if (rows[i].ratio > best[i].ratio) best[i] = rows[i];
      }
    }
  }
  return best;
}

}  // namespace gcwave
