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

#include "gcwave/birkhoff_rott.hpp"

#include <cmath>
#include <string>

#include "gcwave/spectral.hpp"

namespace gcwave {

namespace sp = spectral;

namespace {

cd complexCot(cd w) { return std::cos(w) / std::sin(w); }

void requireSize(const std::vector<cd>& f, const KernelWorkspace& ws,
                 const char* what) {
  if (f.size() != ws.n) {
    throwRuntime(std::string(what) + ": field size " +
                 std::to_string(f.size()) + " does not match workspace " +
                 std::to_string(ws.n));
  }
}

}  // namespace

KernelWorkspace makeWorkspace(const State& state, double chordArcFloor) {
  KernelWorkspace ws;
  ws.n = state.n();
  if (ws.n == 0 || ws.n % 2 != 0) {
    throwRuntime("makeWorkspace: grid size must be even and positive");
  }
  ws.L = state.L;
  ws.points = reconstruct(state);
  ws.chordArc = chordArcMonitor(ws.points, ws.L);
  if (ws.chordArc < chordArcFloor) {
    throwRuntime("chord-arc ratio " + std::to_string(ws.chordArc) +
                 " below floor " + std::to_string(chordArcFloor) +
                 "; interface is close to self-intersection");
  }
  const std::size_t n = ws.n;
  ws.xiAlpha.resize(n);
  const double speed = ws.L / kTwoPi;
  for (std::size_t j = 0; j < n; ++j) {
    ws.xiAlpha[j] = speed * ws.points.tangent[j];
  }
  ws.thetaAlpha = sp::derivativeAlpha(state.theta);
  // cot((xi_j - xi_k)/2): fill the upper triangle and reflect with the
  // odd symmetry of cot, so the table is exactly antisymmetric.
  ws.cotTable.assign(n * n, cd(0.0, 0.0));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      cd c = complexCot(0.5 * (ws.points.xi[j] - ws.points.xi[k]));
      ws.cotTable[j * n + k] = c;
      ws.cotTable[k * n + j] = -c;
    }
  }
  ws.cotFlat.resize(n);
  ws.cotFlat[0] = 0.0;
  for (std::size_t d = 1; d < n; ++d) {
    ws.cotFlat[d] = 1.0 / std::tan(kPi * static_cast<double>(d) /
                                   static_cast<double>(n));
  }
  return ws;
}

std::vector<cd> cauchyTransform(const std::vector<cd>& f,
                                const KernelWorkspace& ws) {
  requireSize(f, ws, "cauchyTransform");
  const std::size_t n = ws.n;
  std::vector<cd> out(n);
  // Alternate-point rule: nodes of parity opposite to the target, with
  // weight 2h = 2*(2*pi/n); combined with 1/(2*pi*i) this gives -2i/n.
  const cd pref = cd(0.0, -2.0 / static_cast<double>(n));
  for (std::size_t j = 0; j < n; ++j) {
    cd sum = 0.0;
    const cd* row = &ws.cotTable[j * n];
    for (std::size_t m = (j + 1) % 2; m < n; m += 2) {
      sum += f[m] * ws.xiAlpha[m] * row[m];
    }
    out[j] = pref * sum;
  }
  return out;
}

std::vector<cd> birkhoffRottVelocity(const State& state,
                                     const KernelWorkspace& ws) {
  if (state.gamma.size() != ws.n) {
    throwRuntime("birkhoffRottVelocity: gamma size does not match workspace");
  }
  std::vector<cd> half(ws.n);
  for (std::size_t j = 0; j < ws.n; ++j) {
    half[j] = 0.5 * state.gamma[j] * std::conj(ws.points.tangent[j]);
  }
  std::vector<cd> wbar = cauchyTransform(half, ws);
  for (std::size_t j = 0; j < ws.n; ++j) wbar[j] += half[j];
  return wbar;
}

std::vector<double> doubleLayer(const std::vector<double>& f,
                                const KernelWorkspace& ws) {
  return sp::realPart(cauchyTransform(sp::toComplex(f), ws));
}

std::vector<double> adjointDoubleLayer(const std::vector<double>& f,
                                       const KernelWorkspace& ws) {
  if (f.size() != ws.n) {
    throwRuntime("adjointDoubleLayer: field size does not match workspace");
  }
  std::vector<cd> g(ws.n);
  for (std::size_t j = 0; j < ws.n; ++j) {
    g[j] = f[j] * std::conj(ws.points.tangent[j]);
  }
  std::vector<cd> h = cauchyTransform(g, ws);
  std::vector<double> out(ws.n);
  for (std::size_t j = 0; j < ws.n; ++j) {
    out[j] = -(ws.points.tangent[j] * h[j]).real();
  }
  return out;
}

std::vector<cd> remainderR(const std::vector<cd>& f,
                           const KernelWorkspace& ws) {
  requireSize(f, ws, "remainderR");
  const std::size_t n = ws.n;
  std::vector<cd> out(n);
  const double inv = 1.0 / static_cast<double>(n);
  for (std::size_t j = 0; j < n; ++j) {
    const cd* row = &ws.cotTable[j * n];
    cd sum = f[j] * cd(0.0, -ws.thetaAlpha[j]);  // diagonal limit
    for (std::size_t m = 0; m < n; ++m) {
      if (m == j) continue;
      const std::size_t d = (j + n - m) % n;
      sum += f[m] * (ws.xiAlpha[m] * row[m] - ws.cotFlat[d]);
    }
    out[j] = inv * sum;
  }
  return out;
}

std::vector<cd> remainderR(const std::vector<double>& f,
                           const KernelWorkspace& ws) {
  return remainderR(sp::toComplex(f), ws);
}

std::vector<cd> commutatorExp2itheta(const std::vector<cd>& f,
                                     const KernelWorkspace& ws) {
  requireSize(f, ws, "commutatorExp2itheta");
  const std::size_t n = ws.n;
  std::vector<cd> fa = sp::derivativeAlpha(f);
  std::vector<cd> g(n), gPrime(n);
  for (std::size_t j = 0; j < n; ++j) {
    cd t = ws.points.tangent[j];
    g[j] = t * t;  // e^{2 i theta}
    gPrime[j] = cd(0.0, 2.0 * ws.thetaAlpha[j]) * g[j];
  }
  std::vector<cd> out(n);
  // -(1/2*pi*i) * (2*pi/n) = i/n.
  const cd pref = cd(0.0, 1.0 / static_cast<double>(n));
  for (std::size_t j = 0; j < n; ++j) {
    const cd* row = &ws.cotTable[j * n];
    cd sum = fa[j] * 2.0 * gPrime[j] / ws.xiAlpha[j];  // diagonal limit
    for (std::size_t m = 0; m < n; ++m) {
      if (m == j) continue;
      sum += fa[m] * (g[j] - g[m]) * row[m];
    }
    out[j] = pref * sum;
  }
  return out;
}

std::vector<cd> commutatorVelocity(const std::vector<cd>& W,
                                   const std::vector<cd>& f,
                                   const KernelWorkspace& ws) {
  requireSize(W, ws, "commutatorVelocity");
  requireSize(f, ws, "commutatorVelocity");
  const std::size_t n = ws.n;
  std::vector<cd> fa = sp::derivativeAlpha(f);
  std::vector<cd> wa = sp::derivativeAlpha(W);
  std::vector<cd> out(n);
  // (1/(2*pi*i)) * (2*pi/n) = -i/n.
  const cd pref = cd(0.0, -1.0 / static_cast<double>(n));
  for (std::size_t j = 0; j < n; ++j) {
    const cd* row = &ws.cotTable[j * n];
    cd sum = 2.0 * wa[j] * fa[j] / ws.xiAlpha[j];  // diagonal limit
    for (std::size_t m = 0; m < n; ++m) {
      if (m == j) continue;
      sum += fa[m] * (W[j] - W[m]) * row[m];
    }
    out[j] = pref * sum;
  }
  return out;
}

}  // namespace gcwave
