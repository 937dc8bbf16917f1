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

#ifndef GCWAVE_COMMON_HPP
#define GCWAVE_COMMON_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace gcwave {

using cd = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;

// Coarse error taxonomy mirrored by the C API status codes:
//   Input   -> malformed configs, files, or arguments (exit code 2)
//   Runtime -> aborts during a run: chord-arc collapse, NaN, CFL violation,
//              Taylor-sign loss, solver non-convergence (exit code 3)
//   Verify  -> a verification check failed (exit code 1)
enum class ErrorKind { Input, Runtime, Verify };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void throwInput(const std::string& msg) {
  throw Error(ErrorKind::Input, msg);
}
[[noreturn]] inline void throwRuntime(const std::string& msg) {
  throw Error(ErrorKind::Runtime, msg);
}

}  // namespace gcwave

#endif  // GCWAVE_COMMON_HPP
