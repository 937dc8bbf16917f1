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

#include "gcwave/io.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "gcwave/common.hpp"

namespace gcwave {

namespace {

using ordered_json = nlohmann::ordered_json;

void requireFinite(const std::vector<double>& f, const char* what) {
  for (double v : f) {
    if (!std::isfinite(v)) {
      throwRuntime(std::string("snapshot: non-finite value in ") + what);
    }
  }
}

double finiteNumber(const ordered_json& j, const std::string& what) {
  if (!j.is_number()) throwInput("snapshot: field '" + what + "' must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) {
    throwInput("snapshot: field '" + what + "' is not finite");
  }
  return v;
}

std::vector<double> finiteArray(const ordered_json& j, std::size_t n,
                                const std::string& what) {
  if (!j.is_array() || j.size() != n) {
    throwInput("snapshot: field '" + what + "' must be an array of length n");
  }
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = finiteNumber(j[i], what);
  }
  return out;
}

}  // namespace

std::string snapshotToJson(const State& state) {
  const std::size_t n = state.n();
  if (n == 0 || state.gamma.size() != n) {
    throwRuntime("snapshot: state sizes are inconsistent");
  }
  if (!std::isfinite(state.t) || !std::isfinite(state.L) || state.L <= 0.0) {
    throwRuntime("snapshot: non-finite or non-positive scalar field");
  }
  requireFinite(state.theta, "theta");
  requireFinite(state.gamma, "gamma");
  ordered_json j;
  j["n"] = n;
  j["t"] = state.t;
  j["L"] = state.L;
  j["theta"] = state.theta;
  j["gamma"] = state.gamma;
  return j.dump();
}

State snapshotFromJson(const std::string& line) {
  ordered_json j;
  try {
    j = ordered_json::parse(line);
  } catch (const std::exception& e) {
    throwInput(std::string("snapshot: malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throwInput("snapshot: expected a JSON object");
  for (const auto& item : j.items()) {
    const std::string& key = item.key();
    if (key != "n" && key != "t" && key != "L" && key != "theta" &&
        key != "gamma") {
      throwInput("snapshot: unknown field '" + key + "'");
    }
  }
  if (!j.contains("n") || !j.contains("t") || !j.contains("L") ||
      !j.contains("theta") || !j.contains("gamma")) {
    throwInput("snapshot: missing one of the fields n, t, L, theta, gamma");
  }
  if (!j["n"].is_number_unsigned()) {
    throwInput("snapshot: field 'n' must be a nonnegative integer");
  }
  const std::size_t n = j["n"].get<std::size_t>();
  if (n == 0) throwInput("snapshot: n must be positive");
  State s;
  s.t = finiteNumber(j["t"], "t");
  s.L = finiteNumber(j["L"], "L");
  if (s.L <= 0.0) throwInput("snapshot: L must be positive");
  s.theta = finiteArray(j["theta"], n, "theta");
  s.gamma = finiteArray(j["gamma"], n, "gamma");
  return s;
}

void writeSnapshots(const std::string& path, const std::vector<State>& traj) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throwInput("cannot open snapshot file '" + path + "' for writing");
  for (const State& s : traj) {
    out << snapshotToJson(s) << '\n';
  }
  out.flush();
  if (!out) throwRuntime("failed writing snapshot file '" + path + "'");
}

std::vector<State> readSnapshots(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throwInput("cannot open snapshot file '" + path + "'");
  std::vector<State> traj;
  std::string line;
  std::size_t lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    bool blank = true;
    for (char c : line) {
      if (c != ' ' && c != '\t') {
        blank = false;
        break;
      }
    }
    if (blank) continue;
    try {
      traj.push_back(snapshotFromJson(line));
    } catch (const Error& e) {
      throwInput("snapshot file '" + path + "' line " +
                 std::to_string(lineNo) + ": " + e.what());
    }
  }
  if (traj.empty()) {
    throwInput("snapshot file '" + path + "' holds no snapshots");
  }
  return traj;
}

CsvWriter::CsvWriter(const std::string& path,
                     const std::vector<std::string>& columns)
    : out_(path, std::ios::binary), columns_(columns.size()), path_(path) {
  if (!out_) throwInput("cannot open diagnostics file '" + path + "'");
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i > 0) out_ << ',';
    out_ << columns[i];
  }
  out_ << '\n';
}

void CsvWriter::writeRow(const std::vector<double>& values) {
  if (values.size() != columns_) {
    throwRuntime("diagnostics row width disagrees with the header");
  }
  char buf[40];
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.16e", values[i]);
    if (i > 0) out_ << ',';
    out_ << buf;
  }
  out_ << '\n';
  if (!out_) throwRuntime("failed writing diagnostics file '" + path_ + "'");
}

void CsvWriter::flush() { out_.flush(); }

}  // namespace gcwave
