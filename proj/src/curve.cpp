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

#include "gcwave/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gcwave/spectral.hpp"

namespace gcwave {

namespace sp = spectral;

std::vector<double> alphaGrid(std::size_t n) {
  std::vector<double> a(n);
  for (std::size_t j = 0; j < n; ++j) a[j] = kTwoPi * j / n;
  return a;
}

namespace {

// Means of cos(theta) and sin(theta); the trapezoid rule on the
// periodic grid integrates these spectrally accurately.
void closureMeans(const std::vector<double>& theta, double& mc, double& ms) {
  double sc = 0.0, ss = 0.0;
  for (double th : theta) {
    sc += std::cos(th);
    ss += std::sin(th);
  }
  mc = sc / static_cast<double>(theta.size());
  ms = ss / static_cast<double>(theta.size());
}

}  // namespace

cd closureDefect(const State& state) {
  double mc, ms;
  closureMeans(state.theta, mc, ms);
  return cd(state.L * mc - kTwoPi, state.L * ms);
}

CurvePoints reconstruct(const State& state) {
  const std::size_t n = state.n();
  if (n == 0) throwRuntime("reconstruct: empty state");
  CurvePoints pts;
  pts.tangent.resize(n);
  pts.normal.resize(n);
  std::vector<cd> xiAlpha(n);
  const double speed = state.L / kTwoPi;
  for (std::size_t j = 0; j < n; ++j) {
    cd tj(std::cos(state.theta[j]), std::sin(state.theta[j]));
    pts.tangent[j] = tj;
    pts.normal[j] = cd(0.0, 1.0) * tj;
    xiAlpha[j] = speed * tj;
  }
  // xi = m*alpha + periodic part; the mean m of xi_alpha carries the
  // linear growth (equal to 1 when the closure conditions hold).
  cd m = sp::meanValue(xiAlpha);
  for (cd& v : xiAlpha) v -= m;
  std::vector<cd> periodic = sp::antiderivativeAlpha(xiAlpha);
  std::vector<double> alpha = alphaGrid(n);
  pts.xi.resize(n);
  cd anchor = periodic[0];
  for (std::size_t j = 0; j < n; ++j) {
    pts.xi[j] = m * alpha[j] + periodic[j] - anchor;
  }
  return pts;
}

void closureProject(State& state, double tol) {
  const std::size_t n = state.n();
  if (n == 0) throwRuntime("closureProject: empty state");
  cd defect0 = closureDefect(state);
  if (std::abs(defect0) >= 0.1) {
    throwRuntime("closureProject: defect " + std::to_string(std::abs(defect0)) +
                 " >= 0.1, state looks corrupted");
  }

  // mean exp(i*theta) = mc + i*ms.  Rotating theta by -arg(mc + i*ms)
  // makes the mean real positive (no vertical drift), and the length
  // rescale makes the horizontal travel exactly one period.  This is a
  // well-conditioned correction: the rotation sensitivity of the
  // vertical integral is L * mc = 2*pi, never small for a sane state.
  double mc, ms;
  closureMeans(state.theta, mc, ms);
  const double mag = std::hypot(mc, ms);
  if (mag < 1e-8) {
    throwRuntime("closureProject: mean tangent nearly zero, cannot close");
  }
  const double phi = std::atan2(ms, mc);
  for (double& v : state.theta) v -= phi;
  state.L = kTwoPi / mag;

  cd defect = closureDefect(state);
  if (std::abs(defect) > tol) {
    throwRuntime("closureProject: residual defect " +
                 std::to_string(std::abs(defect)) + " above tolerance");
  }
}

std::vector<double> curvaturePressure(const State& state) {
  std::vector<double> p = sp::derivativeS(state.theta, 1, state.L);
  for (double& v : p) v = -v;  // P = -theta_s
  return p;
}

double chordArcMonitor(const CurvePoints& points, double L) {
  const std::size_t n = points.xi.size();
  if (n < 2) throwRuntime("chordArcMonitor: need at least two points");
  const double ds = L / static_cast<double>(n);  // arc step between nodes
  double minRatio = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      cd diff = points.xi[j] - points.xi[k];
      // Winding correction: compare against images shifted by 2*pi*m.
      const double m0 = std::round(-diff.real() / kTwoPi);
      double chord = std::numeric_limits<double>::infinity();
      for (int dm = -1; dm <= 1; ++dm) {
        chord = std::min(chord, std::abs(diff + kTwoPi * (m0 + dm)));
      }
      const std::size_t gap = std::min(k - j, n - (k - j));
      const double arc = ds * static_cast<double>(gap);
      minRatio = std::min(minRatio, chord / arc);
    }
  }
  return minRatio;
}

}  // namespace gcwave
