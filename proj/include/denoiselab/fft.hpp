// Copyright 2026 The denoise-lab Authors
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

#ifndef DENOISELAB_FFT_HPP_
#define DENOISELAB_FFT_HPP_

#include <complex>
#include <cstddef>
#include <vector>

#include "denoiselab/errors.hpp"

namespace denoiselab {

// Iterative radix-2 Cooley-Tukey transform with a cached plan (bit-reversal
// table and twiddle factors). Sizes are powers of two only; every transform
// in this library runs at 512 points or another power of two, so no general
// length support is needed.
class Fft {
 public:
  explicit Fft(std::size_t n) : n_(n) {
    if (n < 2 || (n & (n - 1)) != 0) {
      throw ConfigError("FFT size must be a power of two >= 2");
    }
    bitrev_.resize(n);
    std::size_t log2n = 0;
    while ((std::size_t{1} << log2n) < n) ++log2n;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t r = 0;
      for (std::size_t b = 0; b < log2n; ++b) r |= ((i >> b) & 1u) << (log2n - 1 - b);
      bitrev_[i] = r;
    }
    twiddle_.resize(n / 2);
    const double kTau = 6.28318530717958647692;
    for (std::size_t k = 0; k < n / 2; ++k) {
      const double phi = -kTau * static_cast<double>(k) / static_cast<double>(n);
      twiddle_[k] = {std::cos(phi), std::sin(phi)};
    }
  }

  std::size_t size() const { return n_; }

  void forward(std::complex<double>* data) const { transform(data, false); }

  // Inverse transform including the 1/n factor.
  void inverse(std::complex<double>* data) const {
    transform(data, true);
    const double inv = 1.0 / static_cast<double>(n_);
    for (std::size_t i = 0; i < n_; ++i) data[i] *= inv;
  }

 private:
  void transform(std::complex<double>* a, bool inverse) const {
    for (std::size_t i = 0; i < n_; ++i) {
      const std::size_t j = bitrev_[i];
      if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n_; len <<= 1) {
      const std::size_t half = len >> 1;
      const std::size_t step = n_ / len;
      for (std::size_t start = 0; start < n_; start += len) {
        for (std::size_t k = 0; k < half; ++k) {
          std::complex<double> w = twiddle_[k * step];
          if (inverse) w = std::conj(w);
          const std::complex<double> u = a[start + k];
          const std::complex<double> v = a[start + k + half] * w;
          a[start + k] = u + v;
          a[start + k + half] = u - v;
        }
      }
    }
  }

  std::size_t n_;
  std::vector<std::size_t> bitrev_;
  std::vector<std::complex<double>> twiddle_;
};

}  // namespace denoiselab

#endif  // DENOISELAB_FFT_HPP_
