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

#include "gcwave/fields.hpp"

#include <cmath>
#include <string>

#include "gcwave/spectral.hpp"

namespace gcwave {

namespace sp = spectral;

std::vector<double> normalVelocity(const State& state,
                                   const std::vector<cd>& Wbar) {
  const std::size_t n = state.n();
  std::vector<double> U(n);
  for (std::size_t j = 0; j < n; ++j) {
    cd eit(std::cos(state.theta[j]), std::sin(state.theta[j]));
    U[j] = (Wbar[j] * cd(0.0, 1.0) * eit).real();
  }
  return U;
}

double tangentialVelocity(const State& state, const std::vector<double>& U,
                          std::vector<double>& T) {
  const std::size_t n = state.n();
  std::vector<double> thetaAlpha = sp::derivativeAlpha(state.theta);
  std::vector<double> prod(n);
  for (std::size_t j = 0; j < n; ++j) prod[j] = thetaAlpha[j] * U[j];
  const double mean = sp::meanValue(prod);
  for (double& v : prod) v -= mean;
  T = sp::antiderivativeAlpha(prod);
  return -kTwoPi * mean;  // dL/dt
}

void deltaU(const State& state, const std::vector<cd>& Wbar,
            const std::vector<double>& T, const KernelWorkspace& ws,
            std::vector<double>& delta, std::vector<double>& u) {
  const std::size_t n = state.n();
  std::vector<double> halfGamma(n);
  for (std::size_t j = 0; j < n; ++j) halfGamma[j] = 0.5 * state.gamma[j];
  std::vector<double> kstar = adjointDoubleLayer(halfGamma, ws);
  delta.resize(n);
  double mismatch = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    delta[j] = halfGamma[j] - kstar[j] - T[j];
    // Independent route through the velocity trace.
    double viaW = (Wbar[j] * ws.points.tangent[j]).real() - T[j];
    mismatch = std::max(mismatch, std::abs(delta[j] - viaW));
  }
  if (mismatch > 1e-6) {
    throwRuntime("deltaU: tangential-velocity routes disagree by " +
                 std::to_string(mismatch) +
                 "; layer operator inconsistency");
  }
  u = sp::derivativeS(delta, 1, state.L);
}

DerivedFields computeDerived(const State& state, const KernelWorkspace& ws) {
  DerivedFields der;
  der.Wbar = birkhoffRottVelocity(state, ws);
  der.U = normalVelocity(state, der.Wbar);
  der.Lt = tangentialVelocity(state, der.U, der.T);
  deltaU(state, der.Wbar, der.T, ws, der.delta, der.u);
  return der;
}

std::vector<double> utilde(const State& state, const DerivedFields& der) {
  std::vector<double> ut = der.u;
  const double lam = der.Lt / state.L;
  for (double& v : ut) v += lam;
  return ut;
}

std::vector<double> taylorSign(const State& state, const DerivedFields& der,
                               const KernelWorkspace& ws, double gravity,
                               SolveDiagnostics* diag) {
  const std::size_t n = state.n();
  std::vector<cd> W(n);
  for (std::size_t j = 0; j < n; ++j) W[j] = std::conj(der.Wbar[j]);
  std::vector<cd> cv = commutatorVelocity(W, der.Wbar, ws);

  std::vector<cd> ones(n, cd(1.0, 0.0));
  std::vector<cd> hOnes = cauchyTransform(ones, ws);

  // P_s e^{-i theta} with P = -theta_s.
  std::vector<double> thetaSS = sp::derivativeS(state.theta, 2, state.L);
  std::vector<cd> ps(n);
  for (std::size_t j = 0; j < n; ++j) {
    ps[j] = -thetaSS[j] * std::conj(ws.points.tangent[j]);
  }
  std::vector<cd> hPs = cauchyTransform(ps, ws);

  SecondKindProblem p;
  p.sign = 1.0;
  p.side = LayerSide::Adjoint;
  p.rhs.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    cd inner = cv[j] - cd(0.0, gravity) * (ones[j] - hOnes[j]) +
               (ps[j] - hPs[j]);
    p.rhs[j] = (cd(0.0, 1.0) * ws.points.tangent[j] * inner).real();
  }
  return solveSecondKind(p, ws, diag);
}

namespace {

// Dt theta = theta_t + delta * theta_s.
std::vector<double> materialThetaT(const State& state,
                                   const DerivedFields& der,
                                   const std::vector<double>& thetaT) {
  std::vector<double> thetaS = sp::derivativeS(state.theta, 1, state.L);
  std::vector<double> out(thetaT.size());
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j] = thetaT[j] + der.delta[j] * thetaS[j];
  }
  return out;
}

}  // namespace

std::vector<double> phiError(const State& state, const DerivedFields& der,
                             const std::vector<double>& thetaT,
                             const KernelWorkspace& ws) {
  const std::size_t n = state.n();
  std::vector<double> dtTheta = materialThetaT(state, der, thetaT);
  std::vector<cd> ru = remainderR(der.u, ws);
  std::vector<cd> rdt = remainderR(dtTheta, ws);
  std::vector<cd> comm = commutatorExp2itheta(der.Wbar, ws);
  std::vector<double> phi(n);
  for (std::size_t j = 0; j < n; ++j) {
    phi[j] = ru[j].real() + rdt[j].imag() + comm[j].imag();
  }
  return phi;
}

std::vector<double> psiError(const State& state, const DerivedFields& der,
                             const std::vector<double>& thetaT) {
  const std::size_t n = state.n();
  std::vector<double> dtTheta = materialThetaT(state, der, thetaT);
  std::vector<double> util = utilde(state, der);
  std::vector<cd> W(n);
  for (std::size_t j = 0; j < n; ++j) W[j] = std::conj(der.Wbar[j]);
  std::vector<cd> Ws = sp::derivativeS(W, 1, state.L);
  std::vector<double> psi(n);
  for (std::size_t j = 0; j < n; ++j) {
    cd emit(std::cos(state.theta[j]), -std::sin(state.theta[j]));
    psi[j] = -util[j] * (emit * Ws[j]).real() + dtTheta[j] * dtTheta[j];
  }
  return psi;
}

std::vector<cd> phiComplex(const State& state, const DerivedFields& der,
                           const std::vector<double>& thetaT,
                           const KernelWorkspace& ws) {
  const std::size_t n = state.n();
  std::vector<double> phi = phiError(state, der, thetaT, ws);
  std::vector<cd> ru = remainderR(der.u, ws);
  std::vector<cd> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    out[j] = cd(phi[j], 0.0) - ru[j];  // phi - R(u)
  }
  return out;
}

std::vector<double> omegaError(const FieldFrame& prev, const FieldFrame& mid,
                               const FieldFrame& next,
                               const KernelWorkspace& wsMid) {
  const std::size_t n = mid.state.n();
  const double dtF = next.state.t - mid.state.t;
  const double dtB = mid.state.t - prev.state.t;
  if (dtF <= 0.0 || dtB <= 0.0 ||
      std::abs(dtF - dtB) > 1e-9 * std::max(dtF, dtB)) {
    throwInput("omegaError: window samples must be uniformly spaced in time");
  }
  const double inv2dt = 1.0 / (dtF + dtB);
  const State& s = mid.state;

  std::vector<double> thetaS = sp::derivativeS(s.theta, 1, s.L);
  std::vector<double> thetaSS = sp::derivativeS(s.theta, 2, s.L);
  std::vector<double> uS = sp::derivativeS(mid.der.u, 1, s.L);
  std::vector<double> dtTheta = materialThetaT(s, mid.der, mid.thetaT);

  // H(delta * u_s).
  std::vector<double> deltaUs(n);
  for (std::size_t j = 0; j < n; ++j) deltaUs[j] = mid.der.delta[j] * uS[j];
  std::vector<double> hTerm = sp::hilbert(deltaUs);

  // Dt u by centered difference plus advection.  The remainder R does not
  // annihilate constants, so the argument must be u, not util.
  std::vector<double> dtU(n);
  for (std::size_t j = 0; j < n; ++j) {
    dtU[j] = (next.der.u[j] - prev.der.u[j]) * inv2dt +
             mid.der.delta[j] * uS[j];
  }
  std::vector<cd> rTerm = remainderR(dtU, wsMid);

  // i * Cv(W, u).
  std::vector<cd> W(n);
  for (std::size_t j = 0; j < n; ++j) W[j] = std::conj(mid.der.Wbar[j]);
  std::vector<cd> cv =
      commutatorVelocity(W, sp::toComplex(mid.der.u), wsMid);

  // Dt phi_c by centered difference plus advection.
  std::vector<cd> phiS = sp::derivativeS(mid.phiC, 1, s.L);
  std::vector<cd> dtPhi(n);
  for (std::size_t j = 0; j < n; ++j) {
    dtPhi[j] = (next.phiC[j] - prev.phiC[j]) * inv2dt +
               mid.der.delta[j] * phiS[j];
  }

  std::vector<double> omega(n);
  for (std::size_t j = 0; j < n; ++j) {
    cd complexPart = rTerm[j] + cd(0.0, 1.0) * cv[j] + dtPhi[j];
    omega[j] = hTerm[j] + 2.0 * mid.der.u[j] * dtTheta[j] -
               thetaSS[j] * thetaS[j] + complexPart.real();
  }
  return omega;
}

}  // namespace gcwave
