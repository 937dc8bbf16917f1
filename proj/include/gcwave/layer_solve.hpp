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

// Second-kind integral equations (I +- K) x = b and (I +- K*) x = b.
//
// The layer operators are compact perturbations of the identity on the
// interface, so an unpreconditioned Krylov iteration converges rapidly;
// the solver below is matrix-free GMRES with modified Gram-Schmidt
// orthogonalization and Givens rotations.

#ifndef GCWAVE_LAYER_SOLVE_HPP
#define GCWAVE_LAYER_SOLVE_HPP

#include <vector>

#include "gcwave/birkhoff_rott.hpp"
#include "gcwave/common.hpp"

namespace gcwave {

enum class LayerSide {
  Adjoint,  // operator K*
  Direct,   // operator K
};

struct SecondKindProblem {
  double sign = 1.0;  // solve (I + sign * K or K*) x = b, sign in {+1, -1}
  LayerSide side = LayerSide::Adjoint;
  std::vector<double> rhs;
  double tolerance = 1e-12;  // relative residual target, must be <= 1e-6
  int maxIterations = 200;   // must be >= 10
};

struct SolveDiagnostics {
  double residual = 0.0;          // final relative residual
  int iterations = 0;
  double conditionEstimate = 0.0; // from the projected Hessenberg matrix
};

// Solves the problem to the requested tolerance.  Throws a runtime
// error on non-convergence (near-singular geometry) and an input error
// for parameters outside the documented ranges.
std::vector<double> solveSecondKind(const SecondKindProblem& problem,
                                    const KernelWorkspace& ws,
                                    SolveDiagnostics* diag = nullptr);

}  // namespace gcwave

#endif  // GCWAVE_LAYER_SOLVE_HPP
