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

// Derived interface quantities: velocities, the tangential
// reparametrization speed delta and its derivative u, the normal
// derivative of pressure a ("Taylor sign"), and the lower-order fields
// phi, psi, omega that close the quasilinear identities
//     d theta/dt = H(u) - delta * theta_s + phi,
//     d util/dt  = theta_sss - a * theta_s - delta * util_s + psi,
//     a_s        = H(u_t) + omega.
//
// Frame convention: the evolution is written at fixed alpha with the
// equal-arclength tangential speed T normalized to zero mean.  The
// material derivative along the interface is Dt = d/dt|_alpha +
// delta * d/ds, and util = u + (dL/dt)/L absorbs the uniform tangential
// drift rate so that the identities above hold without residual terms.

#ifndef GCWAVE_FIELDS_HPP
#define GCWAVE_FIELDS_HPP

#include <vector>

#include "gcwave/birkhoff_rott.hpp"
#include "gcwave/common.hpp"
#include "gcwave/curve.hpp"
#include "gcwave/layer_solve.hpp"

namespace gcwave {

struct DerivedFields {
  std::vector<cd> Wbar;       // conjugate fluid velocity trace
  std::vector<double> U;      // normal velocity
  std::vector<double> T;      // tangential frame velocity, zero mean
  double Lt = 0.0;            // dL/dt
  std::vector<double> delta;  // tangential reparametrization speed
  std::vector<double> u;      // d delta / ds
};

// U = Re(Wbar * i * e^{i theta}).
std::vector<double> normalVelocity(const State& state,
                                   const std::vector<cd>& Wbar);

// Equal-arclength frame: T_alpha = theta_alpha * U - mean(theta_alpha *
// U), integrated spectrally with mean(T) = 0.  Returns dL/dt =
// -integral_0^{2pi} theta_alpha * U d alpha and fills T.
double tangentialVelocity(const State& state, const std::vector<double>& U,
                          std::vector<double>& T);

// delta = (I - K*)(gamma/2) - T and u = d delta/ds.  The independent
// route delta = Re(Wbar e^{i theta}) - T must agree; a discrepancy
// above 1e-6 is a hard error (operator inconsistency).
void deltaU(const State& state, const std::vector<cd>& Wbar,
            const std::vector<double>& T, const KernelWorkspace& ws,
            std::vector<double>& delta, std::vector<double>& u);

// Convenience: all of the above from one state.
DerivedFields computeDerived(const State& state, const KernelWorkspace& ws);

// Tangential drift correction util = u + Lt/L.
std::vector<double> utilde(const State& state, const DerivedFields& der);

// Normal derivative of pressure via the second-kind equation
//   (I + K*) a = Re{ i e^{i theta} ( Cv(W, Wbar) - i g (I - Hc)(1)
//                                    + (I - Hc)(P_s e^{-i theta}) ) },
// with P = -theta_s and Cv the velocity commutator.
std::vector<double> taylorSign(const State& state,
                               const DerivedFields& der,
                               const KernelWorkspace& ws, double gravity,
                               SolveDiagnostics* diag = nullptr);

// phi = Re R(u) + Re Hc(Dt theta) + Im [Hc, e^{2 i theta}](Wbar), where
// Dt theta = theta_t + delta * theta_s and Re Hc is evaluated as Im R.
std::vector<double> phiError(const State& state, const DerivedFields& der,
                             const std::vector<double>& thetaT,
                             const KernelWorkspace& ws);

// psi = -util * Re(e^{-i theta} dW/ds) + (Dt theta)^2.
std::vector<double> psiError(const State& state, const DerivedFields& der,
                             const std::vector<double>& thetaT);

// Complex combination phi_c = phi - R(u) whose material time derivative
// enters omega.  Subtracting the kernel remainder of u is what makes the
// a_s identity close to quadrature accuracy on curved states; using the
// bare phi leaves a dt-independent defect of cubic order in the wave
// amplitude.
std::vector<cd> phiComplex(const State& state, const DerivedFields& der,
                           const std::vector<double>& thetaT,
                           const KernelWorkspace& ws);

// One time sample of everything the window audits need.
struct FieldFrame {
  State state;
  DerivedFields der;
  std::vector<double> thetaT;
  std::vector<cd> phiC;
};

// omega at the window center, with d/dt terms from centered differences:
//   omega = H(delta u_s) + 2 u Dt theta - theta_ss theta_s
//           + Re{ R(Dt u) + i Cv(W, u) + Dt phi_c }.
// All occurrences use u itself (not util): the drift Lt/L is constant in
// s but not in t, and both the remainder R and the product term see it.
std::vector<double> omegaError(const FieldFrame& prev, const FieldFrame& mid,
                               const FieldFrame& next,
                               const KernelWorkspace& wsMid);

}  // namespace gcwave

#endif  // GCWAVE_FIELDS_HPP
