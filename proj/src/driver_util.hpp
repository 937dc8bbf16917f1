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

// Internal helpers shared by the batch drivers (not installed).

#ifndef GCWAVE_DRIVER_UTIL_HPP
#define GCWAVE_DRIVER_UTIL_HPP

#include <cmath>
#include <string>
#include <vector>

#include "gcwave/config.hpp"
#include "gcwave/curve.hpp"
#include "gcwave/dynamics.hpp"
#include "gcwave/fields.hpp"
#include "gcwave/spectral.hpp"

namespace gcwave {
namespace detail {

// Relative paths land under outDir; absolute paths pass through.
inline std::string resolvePath(const std::string& outDir,
                               const std::string& path) {
  if (path.empty() || outDir.empty() || path.front() == '/') return path;
  if (outDir.back() == '/') return outDir + path;
  return outDir + "/" + path;
}

// Applies the hilbert mutation hook for the lifetime of a driver call.
class HilbertFlipGuard {
 public:
  explicit HilbertFlipGuard(bool on) : on_(on) {
    if (on_) spectral::debugFlipHilbert(true);
  }
  ~HilbertFlipGuard() {
    if (on_) spectral::debugFlipHilbert(false);
  }
  HilbertFlipGuard(const HilbertFlipGuard&) = delete;
  HilbertFlipGuard& operator=(const HilbertFlipGuard&) = delete;

 private:
  bool on_;
};

inline StepOptions stepOptionsFrom(const RunConfig& config) {
  StepOptions opts;
  opts.scheme = config.scheme;
  opts.mode = config.mode;
  opts.rhs.gravity = config.gravity;
  opts.rhs.solverTolerance = config.tolSolver;
  opts.rhs.chordArcFloor = config.chordArcFloor;
  opts.cfl = config.cfl;
  opts.closureTolerance = config.tolClosure;
  return opts;
}

// Ghost steps for centered time differences: same scheme family, but
// no projection/truncation so the differences see the smooth flow.
inline StepOptions ghostOptionsFrom(const RunConfig& config) {
  StepOptions opts = stepOptionsFrom(config);
  opts.scheme = Scheme::EtdRk2;
  opts.mode = EvolutionMode::Kinematic;
  opts.project = false;
  opts.dealias = false;
  return opts;
}

inline double l2NormDs(const std::vector<double>& f, double L) {
  return std::sqrt(spectral::innerDs(f, f, L));
}

// One field frame (state + derived + kinematic rate + the complex
// error combination) for windowed identities.
inline FieldFrame makeFrame(const State& state, const RunConfig& config) {
  FieldFrame frame;
  frame.state = state;
  KernelWorkspace ws = makeWorkspace(state, config.chordArcFloor);
  frame.der = computeDerived(state, ws);
  frame.thetaT = kinematicThetaT(state, frame.der);
  frame.phiC = phiComplex(state, frame.der, frame.thetaT, ws);
  return frame;
}

}  // namespace detail
}  // namespace gcwave

#endif  // GCWAVE_DRIVER_UTIL_HPP
