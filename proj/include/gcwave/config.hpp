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

// Flat key-value run configuration.  The file format is one
// `key = value` pair per line, `#` starts a comment, blank lines are
// ignored; unknown or repeated keys are errors (fail closed), as are
// malformed numbers.  All keys and defaults are listed in the README.

#ifndef GCWAVE_CONFIG_HPP
#define GCWAVE_CONFIG_HPP

#include <cstddef>
#include <cstdint>
#include <string>

#include "gcwave/dynamics.hpp"

namespace gcwave {

struct RunConfig {
  std::size_t n = 64;           // grid points, even, >= 16
  std::size_t r = 4;            // Sobolev index of the energy, >= 4
  double dt = 5e-3;             // time step, > 0
  double tEnd = 1.0;            // final time, >= 0, integer multiple of dt
  Scheme scheme = Scheme::EtdRk2;
  EvolutionMode mode = EvolutionMode::Kinematic;
  int initMode = 2;             // cosine mode of the initial wave
  double initAmplitude = 1e-3;  // >= 0
  std::string initSnapshot;     // when set, restart from this file instead
  double gravity = 1.0;         // 0 or 1
  double tolClosure = 1e-10;    // > 0
  double tolSolver = 1e-12;     // > 0
  double chordArcFloor = 0.05;  // in (0, 1)
  double cfl = 0.5;             // explicit_rk4 step bound, > 0
  std::size_t snapshotEvery = 100;  // steps between snapshots, >= 1
  std::string diagnosticsPath = "diagnostics.csv";
  std::string snapshotPath = "snapshots.jsonl";
  std::uint64_t seed = 12345;   // randomized-audit seed
  std::size_t auditEnsemble = 8;  // states per estimate audit, >= 1
  bool debugFlipHilbert = false;  // verification mutation hook
};

// Parse configuration text / file.  Throws input errors with the
// offending line or key in the message.
RunConfig parseConfigText(const std::string& text);
RunConfig parseConfigFile(const std::string& path);

// Apply a single `key = value` override (same validation as the file).
void applyConfigOverride(RunConfig& config, const std::string& key,
                         const std::string& value);

// Re-check all cross-field invariants (called by the parsers; public so
// programmatic configs can be validated too).
void validateConfig(const RunConfig& config);

}  // namespace gcwave

#endif  // GCWAVE_CONFIG_HPP
