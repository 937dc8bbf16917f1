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

// Snapshot and diagnostics file formats.
//
// Snapshots: one JSON object per line (JSON Lines), each
//     {"n": N, "t": t, "L": L, "theta": [N reals], "gamma": [N reals]}
// with shortest-round-trip number formatting; readers reject NaN/Inf,
// size mismatches and malformed lines, and write -> read -> write is
// byte-identical.
//
// Diagnostics: CSV with one header line and %.16e columns (17
// significant digits), one row per time step.

#ifndef GCWAVE_IO_HPP
#define GCWAVE_IO_HPP

#include <cstddef>
#include <fstream>
#include <string>
#include <vector>

#include "gcwave/curve.hpp"

namespace gcwave {

// One snapshot as a single-line JSON string (no trailing newline).
// Fails on non-finite values or a size mismatch.
std::string snapshotToJson(const State& state);

// Parse one snapshot line; rejects NaN/Inf, wrong sizes, unknown or
// missing fields, and non-positive L.
State snapshotFromJson(const std::string& line);

// Whole-file helpers for JSON-Lines trajectories (blank lines are
// ignored; at least one snapshot is required on read).
void writeSnapshots(const std::string& path, const std::vector<State>& traj);
std::vector<State> readSnapshots(const std::string& path);

// Incremental diagnostics writer: header once, then one row per call,
// every number rendered as %.16e.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& columns);
  void writeRow(const std::vector<double>& values);
  void flush();

 private:
  std::ofstream out_;
  std::size_t columns_ = 0;
  std::string path_;
};

}  // namespace gcwave

#endif  // GCWAVE_IO_HPP
