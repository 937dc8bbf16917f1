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

// Pseudospectral toolbox for 2*pi-periodic grids.
//
// All fields live on the uniform grid alpha_j = 2*pi*j/n, j = 0..n-1.
// Fourier coefficients use the convention
//     f(alpha) = sum_k fhat_k exp(i k alpha),
// with the forward transform scaled by 1/n and indices laid out as
// k = 0, 1, ..., n/2-1, -n/2, ..., -1 (standard FFT order).  The
// wavenumber attached to slot n/2 is taken NEGATIVE (-n/2) so that the
// periodic Hilbert transform satisfies H(H(f)) = -(f - mean f) exactly
// on every grid field, including ones with Nyquist content.

#ifndef GCWAVE_SPECTRAL_HPP
#define GCWAVE_SPECTRAL_HPP

#include <cstddef>
#include <vector>

#include "gcwave/common.hpp"

namespace gcwave::spectral {

// Signed wavenumber for FFT slot idx in a length-n transform.
int signedWavenumber(std::size_t idx, std::size_t n);

// Forward transform, scaled by 1/n: samples -> coefficients.
std::vector<cd> fft(const std::vector<cd>& samples);

// Inverse transform, unscaled: coefficients -> samples.
std::vector<cd> ifft(const std::vector<cd>& coeffs);

// Mean value (the k = 0 coefficient).
cd meanValue(const std::vector<cd>& f);
double meanValue(const std::vector<double>& f);

// m-th derivative with respect to alpha.  Odd orders zero the Nyquist
// slot so that real input produces real output.
std::vector<cd> derivativeAlpha(const std::vector<cd>& f, int order = 1);
std::vector<double> derivativeAlpha(const std::vector<double>& f, int order = 1);

// m-th derivative with respect to arc length s = alpha * L / (2*pi).
std::vector<cd> derivativeS(const std::vector<cd>& f, int order, double L);
std::vector<double> derivativeS(const std::vector<double>& f, int order, double L);

// Periodic Hilbert transform: multiplier -i*sgn(k), sgn(0) = 0.
std::vector<cd> hilbert(const std::vector<cd>& f);
std::vector<double> hilbert(const std::vector<double>& f);

// Mutation hook for verification tooling only: flips the sign of the
// hilbert multiplier so the transform suites can prove they detect a
// broken operator.  Process-global; always restore to false.
void debugFlipHilbert(bool flip);

// D = H d/ds, the positive operator with symbol |k| * 2*pi/L.
std::vector<cd> applyD(const std::vector<cd>& f, double L);
std::vector<double> applyD(const std::vector<double>& f, double L);

// Antiderivative in alpha with zero mean; the k = 0 input coefficient
// is dropped and the Nyquist slot is zeroed.
std::vector<cd> antiderivativeAlpha(const std::vector<cd>& f);
std::vector<double> antiderivativeAlpha(const std::vector<double>& f);

// Trigonometric resampling between uniform grids of size n and m.
// Upsampling splits the Nyquist coefficient symmetrically; downsampling
// folds the discarded conjugate slot into the new Nyquist slot.
std::vector<cd> resample(const std::vector<cd>& f, std::size_t m);
std::vector<double> resample(const std::vector<double>& f, std::size_t m);

// Zero every mode with |k| > n/3 (and the Nyquist slot), in place.
void dealias23(std::vector<cd>& f);
void dealias23(std::vector<double>& f);

// Sobolev norm of order r (non-integer allowed) with arc-length scaling:
//   ||f||_{H^r}^2 = sum_k (1 + k_s^2)^r * L * |fhat_k|^2,  k_s = 2*pi*k/L.
double sobolevNorm(const std::vector<cd>& f, double r, double L);
double sobolevNorm(const std::vector<double>& f, double r, double L);

// Discrete arc-length inner product (L/n) * sum_j f_j * conj(g_j),
// real part.
double innerDs(const std::vector<cd>& f, const std::vector<cd>& g, double L);
double innerDs(const std::vector<double>& f, const std::vector<double>& g,
               double L);

// Elementwise helpers.
std::vector<cd> toComplex(const std::vector<double>& re);
std::vector<cd> toComplex(const std::vector<double>& re,
                          const std::vector<double>& im);
std::vector<double> realPart(const std::vector<cd>& f);
std::vector<double> imagPart(const std::vector<cd>& f);

}  // namespace gcwave::spectral

#endif  // GCWAVE_SPECTRAL_HPP
