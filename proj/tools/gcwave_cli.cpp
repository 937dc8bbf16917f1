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

// Batch front end.  Everything numerical lives behind the C API in
// gcwave/gcwave.h; this file only parses arguments and maps statuses
// to exit codes (0 ok, 1 verification failure, 2 input error,
// 3 runtime abort).

#include <cstdio>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "gcwave/gcwave.h"

namespace {

struct CommonArgs {
  std::string configPath;
  std::string outDir = ".";
  std::string seed;
  std::string n;
  bool quiet = false;
};

void addCommonFlags(CLI::App* cmd, CommonArgs* args) {
  cmd->add_option("--config", args->configPath,
                  "flat key = value configuration file");
  cmd->add_option("--out", args->outDir,
                  "directory for output files (default: current)");
  cmd->add_option("--seed", args->seed, "override the audit seed");
  cmd->add_option("--n", args->n, "override the grid size");
  cmd->add_flag("--quiet", args->quiet, "suppress progress output");
}

int toExitCode(gcw_status status) {
  if (status == GCW_OK) return 0;
  std::fprintf(stderr, "gcwave: error: %s\n", gcw_last_error());
  // Internal faults surface as runtime aborts; the other statuses
  // already match the documented exit codes.
  return status == GCW_INTERNAL ? 3 : static_cast<int>(status);
}

using ConfigPtr = std::unique_ptr<gcw_config, decltype(&gcw_config_free)>;

// Builds the effective configuration: defaults, then the file, then
// the command-line overrides.  Returns nullptr after printing an
// error (exit code 2).
ConfigPtr buildConfig(const CommonArgs& args) {
  ConfigPtr cfg(gcw_config_create(), &gcw_config_free);
  if (!cfg) {
    std::fprintf(stderr, "gcwave: error: out of memory\n");
    return ConfigPtr(nullptr, &gcw_config_free);
  }
  if (!args.configPath.empty() &&
      gcw_config_load(cfg.get(), args.configPath.c_str()) != GCW_OK) {
    std::fprintf(stderr, "gcwave: error: %s\n", gcw_last_error());
    return ConfigPtr(nullptr, &gcw_config_free);
  }
  if (!args.seed.empty() &&
      gcw_config_set(cfg.get(), "seed", args.seed.c_str()) != GCW_OK) {
    std::fprintf(stderr, "gcwave: error: %s\n", gcw_last_error());
    return ConfigPtr(nullptr, &gcw_config_free);
  }
  if (!args.n.empty() &&
      gcw_config_set(cfg.get(), "n", args.n.c_str()) != GCW_OK) {
    std::fprintf(stderr, "gcwave: error: %s\n", gcw_last_error());
    return ConfigPtr(nullptr, &gcw_config_free);
  }
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "gcwave: spectral boundary-integral solver for periodic "
      "gravity-capillary interfaces"};
  app.require_subcommand(1);

  CommonArgs runArgs, verifyArgs, auditArgs;
  std::string trajectory;

  CLI::App* run = app.add_subcommand(
      "run", "march the configured problem; write diagnostics + snapshots");
  addCommonFlags(run, &runArgs);

  CLI::App* verify = app.add_subcommand(
      "verify", "run the module invariant suites; write verify_report.json");
  addCommonFlags(verify, &verifyArgs);

  CLI::App* audit = app.add_subcommand(
      "audit", "audit a snapshot trajectory; write audit reports");
  addCommonFlags(audit, &auditArgs);
  audit->add_option("--trajectory", trajectory,
                    "snapshot file to audit (default: the configured "
                    "snapshot_path inside --out)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // bad command line is an input error
  }

  if (run->parsed()) {
    ConfigPtr cfg = buildConfig(runArgs);
    if (!cfg) return 2;
    return toExitCode(gcw_run(cfg.get(), runArgs.outDir.c_str(),
                              runArgs.quiet ? 1 : 0));
  }
  if (verify->parsed()) {
    ConfigPtr cfg = buildConfig(verifyArgs);
    if (!cfg) return 2;
    return toExitCode(gcw_verify(cfg.get(), verifyArgs.outDir.c_str(),
                                 verifyArgs.quiet ? 1 : 0));
  }
  ConfigPtr cfg = buildConfig(auditArgs);
  if (!cfg) return 2;
  return toExitCode(gcw_audit(cfg.get(),
                              trajectory.empty() ? nullptr
                                                 : trajectory.c_str(),
                              auditArgs.outDir.c_str(),
                              auditArgs.quiet ? 1 : 0));
}
