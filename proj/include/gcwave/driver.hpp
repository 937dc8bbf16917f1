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

// Batch drivers behind the command-line subcommands:
//   runSimulation   -- time marching with diagnostics CSV + snapshots
//   verifySuites    -- operator/identity invariant checks, JSON report
//   auditTrajectory -- energy-rate and operator-bound audits of a
//                      recorded trajectory, CSV + JSON report
// Paths from the configuration resolve relative to outDir ("." when
// empty); absolute paths are used as given.

#ifndef GCWAVE_DRIVER_HPP
#define GCWAVE_DRIVER_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "gcwave/config.hpp"
#include "gcwave/curve.hpp"
#include "gcwave/energy.hpp"

namespace gcwave {

struct RunOutcome {
  State finalState;
  std::size_t steps = 0;
  std::string diagnosticsPath;  // resolved
  std::string snapshotPath;     // resolved
};

// March the configured problem to t_end, writing one diagnostics row
// per state (including t = 0) and snapshots at step 0, every
// snapshot_every steps, and the final step.  Aborts (exceptions of kind
// Runtime) carry the offending time in the message.
RunOutcome runSimulation(const RunConfig& config, const std::string& outDir,
                         bool quiet);

struct CheckResult {
  std::string name;
  double value = 0.0;      // measured error/quantity
  double tolerance = 0.0;  // bound it must satisfy (see README table)
  bool pass = false;
};

struct VerifyOutcome {
  std::vector<CheckResult> checks;
  bool pass = false;
  std::string reportPath;  // resolved JSON report location
};

// Run the module invariant suites at the configured grid size and
// write a machine-readable pass/fail report (verify_report.json).
VerifyOutcome verifySuites(const RunConfig& config, const std::string& outDir,
                           bool quiet);

struct AuditOutcome {
  RateAuditResult rate;
  double energyDrift = 0.0;  // max |E - E0| / E0 over the trajectory
  std::vector<EstimateRow> rows;
  bool pass = false;
  std::string reportCsvPath;
  std::string summaryJsonPath;
};

// Audit a snapshot trajectory (JSON Lines, as written by
// runSimulation): recompute the energy at every snapshot, run the
// one-sided rate audit, tabulate the operator-bound rows on both the
// seeded ensemble and the trajectory states, and write
// audit_report.csv + audit_summary.json.
AuditOutcome auditTrajectory(const RunConfig& config,
                             const std::string& trajectoryPath,
                             const std::string& outDir, bool quiet);

}  // namespace gcwave

#endif  // GCWAVE_DRIVER_HPP
