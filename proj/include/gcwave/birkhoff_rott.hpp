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

// Singular and near-singular integral operators on the interface.
//
// The mapped Hilbert transform of a grid field f is
//     Hc(f)(alpha) = (1/2*pi*i) p.v. integral f(beta) * xi'(beta)
//                        * cot((xi(alpha) - xi(beta))/2) d beta,
// where the cotangent periodizes the Cauchy kernel over the horizontal
// images xi + 2*pi*m of the curve.  Principal values are evaluated with
// the alternate-point trapezoidal rule (nodes of opposite parity,
// weight 2*(2*pi/n)), which is spectrally accurate for analytic data.
// Smooth difference kernels use the plain trapezoidal rule with their
// analytic diagonal limits.

#ifndef GCWAVE_BIRKHOFF_ROTT_HPP
#define GCWAVE_BIRKHOFF_ROTT_HPP

#include <cstddef>
#include <vector>

#include "gcwave/common.hpp"
#include "gcwave/curve.hpp"

namespace gcwave {

// Precomputed kernel data shared by all operators at one state.
struct KernelWorkspace {
  std::size_t n = 0;
  double L = 0.0;
  CurvePoints points;
  std::vector<cd> xiAlpha;          // d xi / d alpha = (L/2pi) e^{i theta}
  std::vector<double> thetaAlpha;   // spectral derivative of theta
  std::vector<cd> cotTable;         // cot((xi_j - xi_k)/2), row-major, diag 0
  std::vector<double> cotFlat;      // cot(pi*d/n) for offsets d = 0..n-1
  double chordArc = 0.0;            // monitor value at construction

  const cd& cot(std::size_t j, std::size_t k) const {
    return cotTable[j * n + k];
  }
};

// Builds the workspace from a state; fails if the chord-arc monitor is
// below floor (the kernel table would blow up).  Pass floor = 0 to skip
// the check.
KernelWorkspace makeWorkspace(const State& state, double chordArcFloor = 0.05);

// Mapped Hilbert transform Hc(f) by the alternate-point rule.
std::vector<cd> cauchyTransform(const std::vector<cd>& f,
                                const KernelWorkspace& ws);

// Conjugate interface velocity
//     Wbar = Hc(gamma e^{-i theta} / 2) + gamma e^{-i theta} / 2,
// the trace of the fluid velocity on the interface (conjugated).  The
// two terms use the same quadrature, so identities that combine them
// hold to machine precision on the grid.
std::vector<cd> birkhoffRottVelocity(const State& state,
                                     const KernelWorkspace& ws);

// Double layer K f = Re Hc(f) and its adjoint
// K* f = -Re(e^{i theta} Hc(e^{-i theta} f)), both real-to-real.
std::vector<double> doubleLayer(const std::vector<double>& f,
                                const KernelWorkspace& ws);
std::vector<double> adjointDoubleLayer(const std::vector<double>& f,
                                       const KernelWorkspace& ws);

// Remainder operator R(f) defined by i*Hc(f) = H(f) + R(f): the
// difference kernel xi'(beta) cot((xi_j - xi_k)/2) - cot((alpha_j -
// alpha_k)/2) is smooth with diagonal limit -i d theta/d alpha, and is
// integrated by the plain trapezoidal rule.
std::vector<cd> remainderR(const std::vector<cd>& f,
                           const KernelWorkspace& ws);
std::vector<cd> remainderR(const std::vector<double>& f,
                           const KernelWorkspace& ws);

// Commutator [Hc, e^{2 i theta}] applied to f_alpha / xi_alpha:
//     -(1/2*pi*i) integral f'(beta) (e^{2 i theta(alpha)} -
//         e^{2 i theta(beta)}) cot((xi(alpha) - xi(beta))/2) d beta.
// The derivative of f is taken spectrally inside.
std::vector<cd> commutatorExp2itheta(const std::vector<cd>& f,
                                     const KernelWorkspace& ws);

// Velocity commutator [W, Hc] applied to f_alpha / xi_alpha, written
// with the curve kernel (the 1/xi_alpha cancels the kernel's measure):
//     (1/(2*pi*i)) p.v. integral (W(alpha) - W(beta)) f'(beta)
//         cot((xi(alpha) - xi(beta))/2) d beta,
// with diagonal integrand 2 W'(alpha) f'(alpha) / xi_alpha(alpha).
std::vector<cd> commutatorVelocity(const std::vector<cd>& W,
                                   const std::vector<cd>& f,
                                   const KernelWorkspace& ws);

}  // namespace gcwave

#endif  // GCWAVE_BIRKHOFF_ROTT_HPP
