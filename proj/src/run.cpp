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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "driver_util.hpp"
#include "gcwave/driver.hpp"
#include "gcwave/energy.hpp"
#include "gcwave/io.hpp"

namespace gcwave {

namespace sp = spectral;
using detail::ghostOptionsFrom;
using detail::HilbertFlipGuard;
using detail::l2NormDs;
using detail::makeFrame;
using detail::resolvePath;
using detail::stepOptionsFrom;

namespace {

State initialState(const RunConfig& config) {
  if (!config.initSnapshot.empty()) {
    State s = readSnapshots(config.initSnapshot).back();
    if (s.n() < 16 || s.n() % 2 != 0) {
      throwInput("init_snapshot: grid size must be even and at least 16");
    }
    try {
      closureProject(s, config.tolClosure);
    } catch (const Error& e) {
      throwInput(std::string("init_snapshot: state fails the closure "
                             "conditions: ") +
                 e.what());
    }
    return s;
  }
  if (config.initAmplitude == 0.0) {
    State s;
    s.theta.assign(config.n, 0.0);
    s.gamma.assign(config.n, 0.0);
    s.L = kTwoPi;
    return s;
  }
  return initialWave(config.n, config.initMode, config.initAmplitude,
                     config.gravity);
}

double minElement(const std::vector<double>& f) {
  double m = f[0];
  for (double v : f) m = std::min(m, v);
  return m;
}

// Relative L2 residual with a small absolute floor so that identically
// zero identities report zero instead of noise ratios.
double relativeResidual(const std::vector<double>& diff,
                        const std::vector<double>& reference, double L) {
  return l2NormDs(diff, L) / std::max(l2NormDs(reference, L), 1e-10);
}

// Everything one diagnostics row needs; the time-window residuals use
// ghost steps of the configured dt with projection/truncation off.
std::vector<double> diagnosticsRow(const State& state,
                                   const RunConfig& config,
                                   double thetaS0Sup) {
  const std::size_t n = state.n();
  const double L = state.L;

  KernelWorkspace ws = makeWorkspace(state, config.chordArcFloor);
  DerivedFields der = computeDerived(state, ws);
  std::vector<double> a = taylorSign(state, der, ws, config.gravity);
  const double minA = minElement(a);
  if (minA <= 0.0) {
    throwRuntime("taylor-sign positivity lost: min a = " +
                 std::to_string(minA));
  }
  std::vector<double> thetaT = kinematicThetaT(state, der);
  EnergyReport rep = energy(state, der, a, config.r, thetaS0Sup);

  // theta_t = H(u) - delta theta_s + phi.
  std::vector<double> thetaS = sp::derivativeS(state.theta, 1, L);
  std::vector<double> phi = phiError(state, der, thetaT, ws);
  std::vector<double> hu = sp::hilbert(der.u);
  std::vector<double> diff(n);
  for (std::size_t j = 0; j < n; ++j) {
    diff[j] = thetaT[j] - (hu[j] - der.delta[j] * thetaS[j] + phi[j]);
  }
  const double resTheta = relativeResidual(diff, thetaT, L);

  // Ghost window for the time-derivative identities.
  const StepOptions ghost = ghostOptionsFrom(config);
  const double h = config.dt;
  State prevState = stepOnce(state, -h, ghost);
  State nextState = stepOnce(state, h, ghost);
  FieldFrame prev = makeFrame(prevState, config);
  FieldFrame next = makeFrame(nextState, config);
  FieldFrame mid;
  mid.state = state;
  mid.der = der;
  mid.thetaT = thetaT;
  mid.phiC = phiComplex(state, der, thetaT, ws);

  // util_t = theta_sss - a theta_s - delta util_s + psi.
  std::vector<double> utilPrev = utilde(prevState, prev.der);
  std::vector<double> utilNext = utilde(nextState, next.der);
  std::vector<double> uT(n);
  for (std::size_t j = 0; j < n; ++j) {
    uT[j] = (utilNext[j] - utilPrev[j]) / (2.0 * h);
  }
  std::vector<double> util = utilde(state, der);
  std::vector<double> uS = sp::derivativeS(util, 1, L);
  std::vector<double> theta3 = sp::derivativeS(state.theta, 3, L);
  std::vector<double> psi = psiError(state, der, thetaT);
  for (std::size_t j = 0; j < n; ++j) {
    diff[j] = uT[j] - (theta3[j] - a[j] * thetaS[j] -
                       der.delta[j] * uS[j] + psi[j]);
  }
  const double resU = relativeResidual(diff, uT, L);

  // a_s = H(util_t) + omega.
  std::vector<double> aS = sp::derivativeS(a, 1, L);
  std::vector<double> omega = omegaError(prev, mid, next, ws);
  std::vector<double> huT = sp::hilbert(uT);
  for (std::size_t j = 0; j < n; ++j) {
    diff[j] = aS[j] - huT[j] - omega[j];
  }
  const double resAs = relativeResidual(diff, aS, L);

  std::vector<double> row;
  row.reserve(9 + rep.flattened().size());
  row.push_back(state.t);
  row.push_back(L);
  row.push_back(minA);
  row.push_back(ws.chordArc);
  row.push_back(std::abs(closureDefect(state)));
  row.push_back(rep.total);
  for (double v : rep.flattened()) row.push_back(v);
  row.push_back(resTheta);
  row.push_back(resU);
  row.push_back(resAs);
  return row;
}

}  // namespace

RunOutcome runSimulation(const RunConfig& config, const std::string& outDir,
                         bool quiet) {
  HilbertFlipGuard flip(config.debugFlipHilbert);

  State state = initialState(config);
  const auto nSteps =
      static_cast<std::size_t>(std::llround(config.tEnd / config.dt));

  std::vector<std::string> columns = {"t",           "L",
                                      "min_a",       "chord_arc",
                                      "closure_defect", "E_total"};
  for (const std::string& name : energySubTermNames(config.r)) {
    columns.push_back(name);
  }
  columns.push_back("residual_theta");
  columns.push_back("residual_u");
  columns.push_back("residual_as");

  RunOutcome outcome;
  outcome.diagnosticsPath = resolvePath(outDir, config.diagnosticsPath);
  outcome.snapshotPath = resolvePath(outDir, config.snapshotPath);
  CsvWriter csv(outcome.diagnosticsPath, columns);

  const double thetaS0Sup = [&] {
    std::vector<double> slope = sp::derivativeS(state.theta, 1, state.L);
    double s = 0.0;
    for (double v : slope) s = std::max(s, std::abs(v));
    return s;
  }();

  Integrator integ(state, config.dt, stepOptionsFrom(config));
  std::vector<State> snapshots;
  for (std::size_t step = 0;; ++step) {
    const State& cur = integ.state();
    try {
      csv.writeRow(diagnosticsRow(cur, config, thetaS0Sup));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Runtime) {
        throwRuntime(std::string(e.what()) + " (abort at t = " +
                     std::to_string(cur.t) + ")");
      }
      throw;
    }
    if (step % config.snapshotEvery == 0 || step == nSteps) {
      snapshots.push_back(cur);
    }
    if (step == nSteps) break;
    try {
      integ.step();
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Runtime) {
        throwRuntime(std::string(e.what()) + " (abort at t = " +
                     std::to_string(integ.state().t) + ")");
      }
      throw;
    }
  }
  csv.flush();
  writeSnapshots(outcome.snapshotPath, snapshots);

  outcome.finalState = integ.state();
  outcome.steps = nSteps;
  if (!quiet) {
    std::printf("run: %zu steps to t = %.6g, n = %zu, %zu snapshots\n",
                nSteps, outcome.finalState.t, outcome.finalState.n(),
                snapshots.size());
    std::printf("run: diagnostics -> %s\n", outcome.diagnosticsPath.c_str());
    std::printf("run: snapshots   -> %s\n", outcome.snapshotPath.c_str());
  }
  return outcome;
}

}  // namespace gcwave
