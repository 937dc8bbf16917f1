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

// Geometry of the periodic interface described by a tangent angle.
//
// The interface is a curve xi(alpha) in the complex plane, horizontally
// periodic with period 2*pi: xi(alpha + 2*pi) = xi(alpha) + 2*pi.  It is
// parametrized by equal arc length, so |d xi / d alpha| = L / (2*pi) is
// constant and d xi / d alpha = exp(i*theta) * L / (2*pi), where theta
// is the tangent angle and L the arc length of one period.

#ifndef GCWAVE_CURVE_HPP
#define GCWAVE_CURVE_HPP

#include <cstddef>
#include <vector>

#include "gcwave/common.hpp"

namespace gcwave {

// Evolving unknowns on the uniform grid alpha_j = 2*pi*j/n.
struct State {
  std::vector<double> theta;  // tangent angle (radians)
  std::vector<double> gamma;  // vortex-sheet density (velocity units)
  double L = kTwoPi;          // arc length of one spatial period
  double t = 0.0;             // time

  std::size_t n() const { return theta.size(); }
};

// Reconstructed node positions and frame vectors.
struct CurvePoints {
  std::vector<cd> xi;       // positions, anchored so xi(alpha=0) = 0
  std::vector<cd> tangent;  // exp(i*theta), unit by construction
  std::vector<cd> normal;   // i*exp(i*theta)
};

// Uniform parameter grid alpha_j = 2*pi*j/n.
std::vector<double> alphaGrid(std::size_t n);

// Closure defect (L/2*pi) * integral_0^{2pi} exp(i*theta) d alpha - 2*pi.
// Both components vanish exactly when the curve closes up over one
// period with horizontal travel 2*pi and no net vertical drift.
cd closureDefect(const State& state);

// Positions by spectral antiderivative of exp(i*theta) * L / (2*pi).
CurvePoints reconstruct(const State& state);

// Rotates theta by a constant and rescales L so that both closure
// conditions hold exactly: theta -= arg(mean exp(i*theta)) kills the
// vertical drift and L = 2*pi / |mean exp(i*theta)| fixes the
// horizontal travel.  Both corrections are of the order of the
// incoming defect.  Fails if that defect is >= 0.1, which signals a
// corrupted state rather than accumulated roundoff, or if the final
// defect still exceeds tol.
void closureProject(State& state, double tol = 1e-12);

// Interface pressure under unit surface tension: P = -theta_s.
std::vector<double> curvaturePressure(const State& state);

// Minimum over node pairs j != k of
//     min_m |xi_j - xi_k + 2*pi*m| / (arc distance along the curve),
// with the arc distance periodized over one period.  A ratio near 1
// means chord and arc agree (no near self-intersection); the winding
// correction m accounts for images of the curve in adjacent periods.
double chordArcMonitor(const CurvePoints& points, double L);

}  // namespace gcwave

#endif  // GCWAVE_CURVE_HPP
