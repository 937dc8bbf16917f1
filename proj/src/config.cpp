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

#include "gcwave/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gcwave/common.hpp"

namespace gcwave {

namespace {

std::string trim(const std::string& s) {
  const char* ws = " \t\r\n";
  const std::size_t b = s.find_first_not_of(ws);
  if (b == std::string::npos) return "";
  const std::size_t e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

double parseDouble(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &pos);
  } catch (const std::exception&) {
    throwInput("config key '" + key + "': '" + value + "' is not a number");
  }
  if (pos != value.size()) {
    throwInput("config key '" + key + "': trailing characters in '" + value +
               "'");
  }
  if (!std::isfinite(v)) {
    throwInput("config key '" + key + "': value must be finite");
  }
  return v;
}

std::uint64_t parseUnsigned(const std::string& key, const std::string& value) {
  if (!value.empty() && value[0] == '-') {
    throwInput("config key '" + key + "': must be nonnegative, got '" + value +
               "'");
  }
  std::size_t pos = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(value, &pos);
  } catch (const std::exception&) {
    throwInput("config key '" + key + "': '" + value +
               "' is not an integer");
  }
  if (pos != value.size()) {
    throwInput("config key '" + key + "': trailing characters in '" + value +
               "'");
  }
  return v;
}

long long parseInteger(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(value, &pos);
  } catch (const std::exception&) {
    throwInput("config key '" + key + "': '" + value +
               "' is not an integer");
  }
  if (pos != value.size()) {
    throwInput("config key '" + key + "': trailing characters in '" + value +
               "'");
  }
  return v;
}

bool parseBool(const std::string& key, const std::string& value) {
  if (value == "0" || value == "false") return false;
  if (value == "1" || value == "true") return true;
  throwInput("config key '" + key + "': expected 0/1/true/false, got '" +
             value + "'");
}

}  // namespace

void applyConfigOverride(RunConfig& config, const std::string& key,
                         const std::string& value) {
  if (key == "n") {
    config.n = static_cast<std::size_t>(parseUnsigned(key, value));
  } else if (key == "r") {
    config.r = static_cast<std::size_t>(parseUnsigned(key, value));
  } else if (key == "dt") {
    config.dt = parseDouble(key, value);
  } else if (key == "t_end") {
    config.tEnd = parseDouble(key, value);
  } else if (key == "scheme") {
    if (value == "etd_rk2") {
      config.scheme = Scheme::EtdRk2;
    } else if (value == "imex_bdf2") {
      config.scheme = Scheme::ImexBdf2;
    } else if (value == "explicit_rk4") {
      config.scheme = Scheme::ExplicitRk4;
    } else {
      throwInput(
          "config key 'scheme': expected etd_rk2, imex_bdf2 or "
          "explicit_rk4, got '" +
          value + "'");
    }
  } else if (key == "mode") {
    if (value == "kinematic") {
      config.mode = EvolutionMode::Kinematic;
    } else if (value == "quasilinear") {
      config.mode = EvolutionMode::Quasilinear;
    } else {
      throwInput("config key 'mode': expected kinematic or quasilinear, got '" +
                 value + "'");
    }
  } else if (key == "init_mode") {
    config.initMode = static_cast<int>(parseInteger(key, value));
  } else if (key == "init_amplitude") {
    config.initAmplitude = parseDouble(key, value);
  } else if (key == "init_snapshot") {
    config.initSnapshot = value;
  } else if (key == "gravity") {
    config.gravity = parseDouble(key, value);
  } else if (key == "tol_closure") {
    config.tolClosure = parseDouble(key, value);
  } else if (key == "tol_solver") {
    config.tolSolver = parseDouble(key, value);
  } else if (key == "chord_arc_floor") {
    config.chordArcFloor = parseDouble(key, value);
  } else if (key == "cfl") {
    config.cfl = parseDouble(key, value);
  } else if (key == "snapshot_every") {
    config.snapshotEvery = static_cast<std::size_t>(parseUnsigned(key, value));
  } else if (key == "diagnostics_path") {
    config.diagnosticsPath = value;
  } else if (key == "snapshot_path") {
    config.snapshotPath = value;
  } else if (key == "seed") {
    config.seed = parseUnsigned(key, value);
  } else if (key == "audit_ensemble") {
    config.auditEnsemble = static_cast<std::size_t>(parseUnsigned(key, value));
  } else if (key == "debug_flip_hilbert") {
    config.debugFlipHilbert = parseBool(key, value);
  } else {
    throwInput("unknown config key '" + key + "'");
  }
}

void validateConfig(const RunConfig& config) {
  if (config.n < 16 || config.n % 2 != 0) {
    throwInput("config: n must be even and at least 16");
  }
  if (config.r < 4) throwInput("config: r must be at least 4");
  if (!(config.dt > 0.0)) throwInput("config: dt must be positive");
  if (config.tEnd < 0.0) throwInput("config: t_end must be nonnegative");
  const double steps = config.tEnd / config.dt;
  if (std::abs(std::round(steps) * config.dt - config.tEnd) >
      1e-8 * std::max(config.dt, config.tEnd)) {
    throwInput("config: t_end must be an integer multiple of dt");
  }
  if (config.initAmplitude < 0.0) {
    throwInput("config: init_amplitude must be nonnegative");
  }
  if (config.initSnapshot.empty() && config.initAmplitude > 0.0) {
    if (config.initMode < 1 ||
        static_cast<std::size_t>(config.initMode) >= config.n / 2) {
      throwInput("config: init_mode must lie in [1, n/2)");
    }
  }
  if (config.gravity != 0.0 && config.gravity != 1.0) {
    throwInput("config: gravity must be 0 or 1");
  }
  if (!(config.tolClosure > 0.0)) {
    throwInput("config: tol_closure must be positive");
  }
  if (!(config.tolSolver > 0.0)) {
    throwInput("config: tol_solver must be positive");
  }
  if (!(config.chordArcFloor > 0.0) || !(config.chordArcFloor < 1.0)) {
    throwInput("config: chord_arc_floor must lie in (0, 1)");
  }
  if (!(config.cfl > 0.0)) throwInput("config: cfl must be positive");
  if (config.snapshotEvery < 1) {
    throwInput("config: snapshot_every must be at least 1");
  }
  if (config.auditEnsemble < 1) {
    throwInput("config: audit_ensemble must be at least 1");
  }
}

RunConfig parseConfigText(const std::string& text) {
  RunConfig config;
  std::set<std::string> seen;
  std::istringstream in(text);
  std::string line;
  std::size_t lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throwInput("config line " + std::to_string(lineNo) +
                 ": expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throwInput("config line " + std::to_string(lineNo) +
                 ": empty key or value");
    }
    if (!seen.insert(key).second) {
      throwInput("config line " + std::to_string(lineNo) +
                 ": repeated key '" + key + "'");
    }
    applyConfigOverride(config, key, value);
  }
  validateConfig(config);
  return config;
}

RunConfig parseConfigFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throwInput("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parseConfigText(buf.str());
}

}  // namespace gcwave
