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

// Time evolution of (theta, gamma, L).  The kinematic mode advances the
// curve with the interface velocity written in the equal-arclength
// frame; the quasilinear mode advances theta with the reduced equation
//     d theta/dt = H(u) - delta * theta_s + phi
// (gamma still follows its layer equation) and also reports the rate of
// util for residual audits.  The stiff dispersive part is handled per
// Fourier mode by exact 2x2 exponentials.

#ifndef GCWAVE_DYNAMICS_HPP
#define GCWAVE_DYNAMICS_HPP

#include <cstddef>
#include <vector>

#include "gcwave/birkhoff_rott.hpp"
#include "gcwave/common.hpp"
#include "gcwave/curve.hpp"
#include "gcwave/fields.hpp"

namespace gcwave {

enum class Scheme {
  EtdRk2,       // exponential two-stage predictor/corrector (default)
  ImexBdf2,     // implicit linear part, extrapolated remainder
  ExplicitRk4,  // classical RK4, CFL-limited by the k^{3/2} dispersion
};

enum class EvolutionMode {
  Kinematic,    // theta_t from frame kinematics (primary)
  Quasilinear,  // theta_t from the reduced equation
};

struct RhsOptions {
  double gravity = 1.0;           // 0 or 1
  double solverTolerance = 1e-12;
  int solverMaxIterations = 200;
  double chordArcFloor = 0.05;
  bool checkTaylorSign = true;    // abort when min a <= 0
};

// Rates of change at one state, plus everything computed on the way
// that diagnostics want to reuse.
struct RhsBundle {
  std::vector<double> thetaT;
  std::vector<double> gammaT;
  double Lt = 0.0;
  std::vector<double> uT;               // rate of util (quasilinear only)
  std::vector<double> thetaTKinematic;  // kinematic value (quasilinear only)
  DerivedFields der;
  std::vector<double> a;                // Taylor sign (when computed)
  double minA = 0.0;
  double chordArc = 0.0;
  bool quasilinear = false;
};

// theta_t = (2pi/L)(dU/dalpha + T * dtheta/dalpha).
std::vector<double> kinematicThetaT(const State& state,
                                    const DerivedFields& der);

// Node velocity xi_t = U n + T t = (T + iU) e^{i theta}.
std::vector<cd> nodeVelocity(const State& state, const DerivedFields& der);

// Time derivative of the adjoint layer operator applied to a frozen
// density f: both the prefactor e^{i theta} L and the cot kernel are
// differentiated analytically using theta_t, dL/dt and the node
// velocities.  Same alternate-point quadrature as the operator itself.
std::vector<double> adjointLayerTimeDerivative(
    const KernelWorkspace& ws, const std::vector<double>& thetaT, double Lt,
    const std::vector<cd>& nodeVelocity, const std::vector<double>& f);

// Kinematic rates: theta_t from the frame, gamma_t from the second-kind
// equation
//   (I - K*)(gamma_t/2) = (dK*/dt)(gamma/2) + theta_ss - delta * util
//                         - g sin(theta) + U theta_t.
RhsBundle kinematicRhs(const State& state, const RhsOptions& opts = {});

// Quasilinear rates: theta_t = H(u) - delta theta_s + phi, and
// u_t = theta_sss - a theta_s - delta du/ds + psi (the rate of util at
// fixed alpha); gamma_t as in the kinematic mode.
RhsBundle quasilinearRhs(const State& state, const RhsOptions& opts = {});

struct StepOptions {
  Scheme scheme = Scheme::EtdRk2;
  EvolutionMode mode = EvolutionMode::Kinematic;
  RhsOptions rhs;
  double cfl = 0.5;                // explicit_rk4: dt <= cfl * (L/N)^{3/2}
  double closureTolerance = 1e-10;
  bool project = true;             // closure projection after the step
  bool dealias = true;             // 2/3-rule truncation after the step
};

// One step of a self-starting scheme (etd_rk2 or explicit_rk4; for
// imex_bdf2 use Integrator, which owns the history).  Negative dt is
// allowed for etd_rk2 and explicit_rk4 (used to grow audit windows).
// If stage1 is non-null it receives the rates at the input state.
State stepOnce(const State& state, double dt, const StepOptions& opts,
               RhsBundle* stage1 = nullptr);

// Marching driver.  Keeps the two-step history imex_bdf2 needs (the
// first step bootstraps with etd_rk2) and exposes the stage-one rates
// of the latest step for diagnostics.
class Integrator {
 public:
  Integrator(State initial, double dt, const StepOptions& opts);

  const State& state() const { return state_; }
  double dt() const { return dt_; }
  const StepOptions& options() const { return opts_; }
  // Rates evaluated at the pre-step state of the most recent step().
  const RhsBundle& lastStageRhs() const { return lastRhs_; }

  void step();

 private:
  State state_;
  double dt_ = 0.0;
  StepOptions opts_;
  RhsBundle lastRhs_;
  bool haveHistory_ = false;
  std::vector<cd> thetaHatPrev_, gammaHatPrev_;
  std::vector<cd> thetaRatePrev_, gammaRatePrev_;
  double LPrev_ = 0.0;
  double LtPrev_ = 0.0;
};

// The frozen per-mode linear block
//   d/dt (theta_k, gamma_k) = [[0, |ks|/2], [-2(ks^2 + g), 0]]
// with ks = 2 pi k / L; its exponential and the two phi functions of
// exponential integrators, all exact 2x2 matrices.
struct Mat2 {
  double m00 = 0.0, m01 = 0.0, m10 = 0.0, m11 = 0.0;
};
Mat2 linearBlock(double ks, double gravity);
Mat2 blockExp(double dt, double ks, double gravity);
Mat2 blockPhi1(double dt, double ks, double gravity);
Mat2 blockPhi2(double dt, double ks, double gravity);

// Initial data: theta = amplitude * cos(mode * alpha), L from closure,
// gamma on the right-moving branch of the linear block's eigenvector,
// gamma = (2 omega / |ks|) * amplitude * sin(mode * alpha).
State initialWave(std::size_t n, int mode, double amplitude, double gravity);

}  // namespace gcwave

#endif  // GCWAVE_DYNAMICS_HPP
