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

#include "gcwave/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <map>
#include <mutex>
#include <utility>

namespace gcwave::spectral {

namespace {

// Cache of out-of-place c2c plans keyed by transform length.  Plans are
// created with FFTW_UNALIGNED so fftw_execute_dft may run them on any
// buffer.  Plan creation is not thread safe in FFTW, hence the mutex;
// execution through fftw_execute_dft is.
class PlanCache {
 public:
  static PlanCache& instance() {
    static PlanCache cache;
    return cache;
  }

  void execForward(std::size_t n, cd* in, cd* out) {
    fftw_execute_dft(plans(n).first, reinterpret_cast<fftw_complex*>(in),
                     reinterpret_cast<fftw_complex*>(out));
  }

  void execInverse(std::size_t n, cd* in, cd* out) {
    fftw_execute_dft(plans(n).second, reinterpret_cast<fftw_complex*>(in),
                     reinterpret_cast<fftw_complex*>(out));
  }

 private:
  std::pair<fftw_plan, fftw_plan> plans(std::size_t n) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(n);
    if (it != cache_.end()) return it->second;
    std::vector<cd> a(n), b(n);
    unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    fftw_plan fwd = fftw_plan_dft_1d(
        static_cast<int>(n), reinterpret_cast<fftw_complex*>(a.data()),
        reinterpret_cast<fftw_complex*>(b.data()), FFTW_FORWARD, flags);
    fftw_plan inv = fftw_plan_dft_1d(
        static_cast<int>(n), reinterpret_cast<fftw_complex*>(a.data()),
        reinterpret_cast<fftw_complex*>(b.data()), FFTW_BACKWARD, flags);
    if (fwd == nullptr || inv == nullptr) {
      throwRuntime("failed to create FFT plan of length " + std::to_string(n));
    }
    auto res = cache_.emplace(n, std::make_pair(fwd, inv));
    return res.first->second;
  }

  std::mutex mutex_;
  std::map<std::size_t, std::pair<fftw_plan, fftw_plan>> cache_;
};

void requireNonEmptyEven(const std::vector<cd>& f, const char* what) {
  if (f.empty()) throwRuntime(std::string(what) + ": empty field");
  if (f.size() % 2 != 0) {
    throwRuntime(std::string(what) + ": grid size must be even, got " +
                 std::to_string(f.size()));
  }
}

// Applies a diagonal Fourier multiplier: out_k = m(k) * fhat_k.
template <typename Mult>
std::vector<cd> applyMultiplier(const std::vector<cd>& f, Mult m,
                                const char* what) {
  requireNonEmptyEven(f, what);
  std::vector<cd> coeffs = fft(f);
  const std::size_t n = coeffs.size();
  for (std::size_t idx = 0; idx < n; ++idx) {
    coeffs[idx] *= m(signedWavenumber(idx, n));
  }
  return ifft(coeffs);
}

}  // namespace

int signedWavenumber(std::size_t idx, std::size_t n) {
  return idx < n / 2 ? static_cast<int>(idx)
                     : static_cast<int>(idx) - static_cast<int>(n);
}

std::vector<cd> fft(const std::vector<cd>& samples) {
  requireNonEmptyEven(samples, "fft");
  std::vector<cd> in(samples);
  std::vector<cd> out(samples.size());
  PlanCache::instance().execForward(in.size(), in.data(), out.data());
  const double scale = 1.0 / static_cast<double>(out.size());
  for (cd& c : out) c *= scale;
  return out;
}

std::vector<cd> ifft(const std::vector<cd>& coeffs) {
  requireNonEmptyEven(coeffs, "ifft");
  std::vector<cd> in(coeffs);
  std::vector<cd> out(coeffs.size());
  PlanCache::instance().execInverse(in.size(), in.data(), out.data());
  return out;
}

cd meanValue(const std::vector<cd>& f) {
  cd sum = 0.0;
  for (const cd& v : f) sum += v;
  return sum / static_cast<double>(f.size());
}

double meanValue(const std::vector<double>& f) {
  double sum = 0.0;
  for (double v : f) sum += v;
  return sum / static_cast<double>(f.size());
}

std::vector<cd> derivativeAlpha(const std::vector<cd>& f, int order) {
  const std::size_t n = f.size();
  const bool zeroNyquist = (order % 2) != 0;
  return applyMultiplier(
      f,
      [&](int k) -> cd {
        if (zeroNyquist && k == -static_cast<int>(n / 2)) return 0.0;
        return std::pow(cd(0.0, static_cast<double>(k)), order);
      },
      "derivativeAlpha");
}

std::vector<cd> derivativeS(const std::vector<cd>& f, int order, double L) {
  std::vector<cd> d = derivativeAlpha(f, order);
  const double scale = std::pow(kTwoPi / L, order);
  for (cd& v : d) v *= scale;
  return d;
}

namespace {
bool g_flipHilbert = false;
}  // namespace

void debugFlipHilbert(bool flip) { g_flipHilbert = flip; }

std::vector<cd> hilbert(const std::vector<cd>& f) {
  const double sign = g_flipHilbert ? -1.0 : 1.0;
  return applyMultiplier(
      f,
      [sign](int k) -> cd {
        if (k == 0) return 0.0;
        return k > 0 ? cd(0.0, -sign) : cd(0.0, sign);
      },
      "hilbert");
}

std::vector<cd> applyD(const std::vector<cd>& f, double L) {
  const double scale = kTwoPi / L;
  return applyMultiplier(
      f, [&](int k) -> cd { return scale * std::abs(static_cast<double>(k)); },
      "applyD");
}

std::vector<cd> antiderivativeAlpha(const std::vector<cd>& f) {
  const std::size_t n = f.size();
  return applyMultiplier(
      f,
      [&](int k) -> cd {
        if (k == 0 || k == -static_cast<int>(n / 2)) return 0.0;
        return 1.0 / cd(0.0, static_cast<double>(k));
      },
      "antiderivativeAlpha");
}

std::vector<cd> resample(const std::vector<cd>& f, std::size_t m) {
  requireNonEmptyEven(f, "resample");
  if (m == 0 || m % 2 != 0) {
    throwRuntime("resample: target size must be even and positive, got " +
                 std::to_string(m));
  }
  const std::size_t n = f.size();
  if (m == n) return f;
  std::vector<cd> src = fft(f);
  std::vector<cd> dst(m, cd(0.0, 0.0));
  if (m > n) {
    // Copy modes k = -n/2+1 .. n/2-1 and split the Nyquist coefficient
    // between +-n/2 so real fields stay real.
    for (std::size_t idx = 0; idx < n; ++idx) {
      int k = signedWavenumber(idx, n);
      if (k == -static_cast<int>(n / 2)) {
        dst[n / 2] = 0.5 * src[idx];
        dst[m - n / 2] = 0.5 * src[idx];
      } else {
        dst[k >= 0 ? static_cast<std::size_t>(k)
                   : m - static_cast<std::size_t>(-k)] = src[idx];
      }
    }
  } else {
    // Keep |k| < m/2; fold the +m/2 slot into the new Nyquist slot.
    for (std::size_t idx = 0; idx < n; ++idx) {
      int k = signedWavenumber(idx, n);
      if (std::abs(k) < static_cast<int>(m / 2)) {
        dst[k >= 0 ? static_cast<std::size_t>(k)
                   : m - static_cast<std::size_t>(-k)] = src[idx];
      } else if (std::abs(k) == static_cast<int>(m / 2)) {
        dst[m / 2] += src[idx];
      }
    }
  }
  return ifft(dst);
}

void dealias23(std::vector<cd>& f) {
  requireNonEmptyEven(f, "dealias23");
  const std::size_t n = f.size();
  const int kmax = static_cast<int>(n) / 3;
  std::vector<cd> coeffs = fft(f);
  for (std::size_t idx = 0; idx < n; ++idx) {
    int k = signedWavenumber(idx, n);
    if (std::abs(k) > kmax || k == -static_cast<int>(n / 2)) {
      coeffs[idx] = 0.0;
    }
  }
  f = ifft(coeffs);
}

double sobolevNorm(const std::vector<cd>& f, double r, double L) {
  requireNonEmptyEven(f, "sobolevNorm");
  std::vector<cd> coeffs = fft(f);
  const std::size_t n = coeffs.size();
  double sum = 0.0;
  for (std::size_t idx = 0; idx < n; ++idx) {
    const double ks = kTwoPi * signedWavenumber(idx, n) / L;
    sum += std::pow(1.0 + ks * ks, r) * L * std::norm(coeffs[idx]);
  }
  return std::sqrt(sum);
}

double innerDs(const std::vector<cd>& f, const std::vector<cd>& g, double L) {
  if (f.size() != g.size()) throwRuntime("innerDs: size mismatch");
  double sum = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j) {
    sum += (f[j] * std::conj(g[j])).real();
  }
  return sum * L / static_cast<double>(f.size());
}

std::vector<cd> toComplex(const std::vector<double>& re) {
  std::vector<cd> out(re.size());
  for (std::size_t j = 0; j < re.size(); ++j) out[j] = cd(re[j], 0.0);
  return out;
}

std::vector<cd> toComplex(const std::vector<double>& re,
                          const std::vector<double>& im) {
  if (re.size() != im.size()) throwRuntime("toComplex: size mismatch");
  std::vector<cd> out(re.size());
  for (std::size_t j = 0; j < re.size(); ++j) out[j] = cd(re[j], im[j]);
  return out;
}

std::vector<double> realPart(const std::vector<cd>& f) {
  std::vector<double> out(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) out[j] = f[j].real();
  return out;
}

std::vector<double> imagPart(const std::vector<cd>& f) {
  std::vector<double> out(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) out[j] = f[j].imag();
  return out;
}

std::vector<double> derivativeAlpha(const std::vector<double>& f, int order) {
  return realPart(derivativeAlpha(toComplex(f), order));
}

std::vector<double> derivativeS(const std::vector<double>& f, int order,
                                double L) {
  return realPart(derivativeS(toComplex(f), order, L));
}

std::vector<double> hilbert(const std::vector<double>& f) {
  return realPart(hilbert(toComplex(f)));
}

std::vector<double> applyD(const std::vector<double>& f, double L) {
  return realPart(applyD(toComplex(f), L));
}

std::vector<double> antiderivativeAlpha(const std::vector<double>& f) {
  return realPart(antiderivativeAlpha(toComplex(f)));
}

std::vector<double> resample(const std::vector<double>& f, std::size_t m) {
  return realPart(resample(toComplex(f), m));
}

void dealias23(std::vector<double>& f) {
  std::vector<cd> c = toComplex(f);
  dealias23(c);
  f = realPart(c);
}

double sobolevNorm(const std::vector<double>& f, double r, double L) {
  return sobolevNorm(toComplex(f), r, L);
}

double innerDs(const std::vector<double>& f, const std::vector<double>& g,
               double L) {
  if (f.size() != g.size()) throwRuntime("innerDs: size mismatch");
  double sum = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j) sum += f[j] * g[j];
  return sum * L / static_cast<double>(f.size());
}

}  // namespace gcwave::spectral
