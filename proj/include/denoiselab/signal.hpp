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

#ifndef DENOISELAB_SIGNAL_HPP_
#define DENOISELAB_SIGNAL_HPP_

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <vector>

#include "denoiselab/errors.hpp"
#include "denoiselab/fft.hpp"
#include "denoiselab/wave.hpp"

namespace denoiselab {

constexpr int kFrameLen = 512;
constexpr int kFrameStep = 128;

// rms_dbfs of an all-zero signal returns this floor instead of -inf so the
// value stays representable in JSON.
constexpr double kSilenceFloorDb = -200.0;

// Denominator magnitude floor and default magnitude clip for the complex
// ideal ratio mask.
constexpr double kMaskEpsilon = 1e-8;
constexpr double kMaskClip = 10.0;

// One-sided complex spectrogram, frames x bins row-major.
struct Spectrogram {
  std::vector<std::complex<double>> data;
  std::size_t frames = 0;
  std::size_t bins = 0;
  int frame_len = kFrameLen;
  int frame_step = kFrameStep;
  int sample_rate = kCanonicalRate;

  std::complex<double>& at(std::size_t t, std::size_t f) { return data[t * bins + f]; }
  const std::complex<double>& at(std::size_t t, std::size_t f) const {
    return data[t * bins + f];
  }
  bool same_shape(const Spectrogram& o) const {
    return frames == o.frames && bins == o.bins;
  }
};

// Complex mask with bounded magnitude; same layout as the spectrogram it
// multiplies.
struct ComplexMask {
  std::vector<std::complex<double>> data;
  std::size_t frames = 0;
  std::size_t bins = 0;
  double clip_magnitude = kMaskClip;

  std::complex<double>& at(std::size_t t, std::size_t f) { return data[t * bins + f]; }
  const std::complex<double>& at(std::size_t t, std::size_t f) const {
    return data[t * bins + f];
  }
};

// Periodic Hann window (the spectral-analysis variant; satisfies the
// constant-overlap-add property at the 75% overlap used here).
inline std::vector<double> hann_window(int n) {
  std::vector<double> w(static_cast<std::size_t>(n));
  const double kTau = 6.28318530717958647692;
  for (int i = 0; i < n; ++i) {
    w[static_cast<std::size_t>(i)] = 0.5 - 0.5 * std::cos(kTau * i / n);
  }
  return w;
}

inline std::size_t stft_frame_count(std::size_t n_samples, int frame_len, int frame_step) {
  if (n_samples < static_cast<std::size_t>(frame_len)) return 0;
  return (n_samples - static_cast<std::size_t>(frame_len)) /
             static_cast<std::size_t>(frame_step) +
         1;
}

// Windowed one-sided STFT. No zero padding beyond the final full frame:
// trailing samples that do not fill a frame are dropped.
inline Spectrogram stft(const Waveform& x, int frame_len = kFrameLen,
                        int frame_step = kFrameStep) {
  if (frame_len < 2 || (frame_len & (frame_len - 1)) != 0) {
    throw ConfigError("stft frame length must be a power of two");
  }
  if (frame_step <= 0 || frame_len % frame_step != 0) {
    throw ConfigError("stft frame step must divide the frame length");
  }
  if (x.samples.size() < static_cast<std::size_t>(frame_len)) {
    throw DataError("signal shorter than one stft frame");
  }

  const std::size_t frames = stft_frame_count(x.samples.size(), frame_len, frame_step);
  const std::size_t bins = static_cast<std::size_t>(frame_len) / 2 + 1;
  Spectrogram s;
  s.frames = frames;
  s.bins = bins;
  s.frame_len = frame_len;
  s.frame_step = frame_step;
  s.sample_rate = x.sample_rate;
  s.data.resize(frames * bins);

  const std::vector<double> window = hann_window(frame_len);
  const Fft fft(static_cast<std::size_t>(frame_len));
  std::vector<std::complex<double>> buf(static_cast<std::size_t>(frame_len));
  for (std::size_t t = 0; t < frames; ++t) {
    const double* src = x.samples.data() + t * static_cast<std::size_t>(frame_step);
    for (int i = 0; i < frame_len; ++i) {
      buf[static_cast<std::size_t>(i)] = {src[i] * window[static_cast<std::size_t>(i)], 0.0};
    }
    fft.forward(buf.data());
    std::copy(buf.begin(), buf.begin() + static_cast<std::ptrdiff_t>(bins),
              s.data.begin() + static_cast<std::ptrdiff_t>(t * bins));
  }
  return s;
}

// Weighted overlap-add inverse: each frame is inverse-transformed, windowed
// again, accumulated, and the result divided by the summed squared window.
// Guarantees hold on the interior; the first/last frame_len samples carry
// edge taper.
inline Waveform istft(const Spectrogram& s) {
  const std::size_t bins_expect = static_cast<std::size_t>(s.frame_len) / 2 + 1;
  if (s.bins != bins_expect || s.data.size() != s.frames * s.bins) {
    throw DataError("istft: inconsistent spectrogram shape metadata");
  }
  if (s.frames == 0) throw DataError("istft: empty spectrogram");

  const int frame_len = s.frame_len;
  const int frame_step = s.frame_step;
  const std::size_t out_len =
      (s.frames - 1) * static_cast<std::size_t>(frame_step) + static_cast<std::size_t>(frame_len);

  Waveform y;
  y.sample_rate = s.sample_rate;
  y.samples.assign(out_len, 0.0);
  std::vector<double> window_sum(out_len, 0.0);

  const std::vector<double> window = hann_window(frame_len);
  const Fft fft(static_cast<std::size_t>(frame_len));
  std::vector<std::complex<double>> buf(static_cast<std::size_t>(frame_len));
  for (std::size_t t = 0; t < s.frames; ++t) {
    for (std::size_t f = 0; f < s.bins; ++f) buf[f] = s.at(t, f);
    for (std::size_t f = s.bins; f < static_cast<std::size_t>(frame_len); ++f) {
      buf[f] = std::conj(buf[static_cast<std::size_t>(frame_len) - f]);
    }
    fft.inverse(buf.data());
    const std::size_t base = t * static_cast<std::size_t>(frame_step);
    for (int i = 0; i < frame_len; ++i) {
      const double wi = window[static_cast<std::size_t>(i)];
      y.samples[base + static_cast<std::size_t>(i)] += wi * buf[static_cast<std::size_t>(i)].real();
      window_sum[base + static_cast<std::size_t>(i)] += wi * wi;
    }
  }
  for (std::size_t i = 0; i < out_len; ++i) {
    if (window_sum[i] > 1e-12) y.samples[i] /= window_sum[i];
  }
  return y;
}

// RMS level in dB relative to full scale; a full-scale square wave measures
// 0 dBFS. All-zero input reports kSilenceFloorDb.
inline double rms_dbfs(const Waveform& x) {
  if (x.samples.empty()) throw DataError("rms_dbfs: empty signal");
  double energy = 0.0;
  for (double v : x.samples) energy += v * v;
  const double mean = energy / static_cast<double>(x.samples.size());
  if (mean <= 0.0) return kSilenceFloorDb;
  return 10.0 * std::log10(mean);
}

// Pure gain so that the result measures target_dbfs exactly.
inline Waveform normalize_rms(const Waveform& x, double target_dbfs) {
  const double level = rms_dbfs(x);
  if (level <= kSilenceFloorDb) throw DataError("normalize_rms: zero-energy signal");
  const double gain = std::pow(10.0, (target_dbfs - level) / 20.0);
  Waveform y = x;
  for (double& v : y.samples) v *= gain;
  return y;
}

struct MixResult {
  Waveform mixture;
  Waveform speech;        // speech component, normalized to -20 dBFS
  Waveform scaled_noise;  // noise component after SNR scaling
};

// Mixes speech and noise at the requested SNR. Both components are first
// normalized to -20 dBFS (noise truncated to the speech length beforehand),
// then the noise is scaled by 10^(-snr/20); the speech stays at the
// reference level.
inline MixResult mix_at_snr(const Waveform& speech, const Waveform& noise, double snr_db) {
  if (speech.sample_rate != noise.sample_rate) {
    throw DataError("mix_at_snr: sample-rate mismatch");
  }
  if (noise.samples.size() < speech.samples.size()) {
    throw DataError("mix_at_snr: noise shorter than speech");
  }
  Waveform noise_cut;
  noise_cut.sample_rate = noise.sample_rate;
  noise_cut.samples.assign(noise.samples.begin(),
                           noise.samples.begin() + static_cast<std::ptrdiff_t>(speech.samples.size()));

  MixResult r;
  r.speech = normalize_rms(speech, -20.0);
  r.scaled_noise = normalize_rms(noise_cut, -20.0);
  const double gain = std::pow(10.0, -snr_db / 20.0);
  for (double& v : r.scaled_noise.samples) v *= gain;

  r.mixture.sample_rate = speech.sample_rate;
  r.mixture.samples.resize(speech.samples.size());
  for (std::size_t i = 0; i < r.mixture.samples.size(); ++i) {
    r.mixture.samples[i] = r.speech.samples[i] + r.scaled_noise.samples[i];
  }
  return r;
}

namespace detail {

// Zeroth-order modified Bessel function, power series.
inline double bessel_i0(double x) {
  double sum = 1.0, term = 1.0;
  const double half_sq = 0.25 * x * x;
  for (int k = 1; k < 64; ++k) {
    term *= half_sq / (static_cast<double>(k) * k);
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return sum;
}

}  // namespace detail

// Rational-ratio polyphase resampler: Kaiser-windowed sinc, 64 taps per
// phase, cutoff at 0.45 * min(source, target). Each phase is normalized to
// unit DC gain.
inline Waveform resample(const Waveform& x, int target_rate) {
  if (target_rate <= 0) throw ConfigError("resample: target rate must be positive");
  if (target_rate == x.sample_rate) return x;

  const std::int64_t g = std::gcd<std::int64_t>(x.sample_rate, target_rate);
  const std::int64_t up = target_rate / g;    // L
  const std::int64_t down = x.sample_rate / g;  // M
  if (up > 4096) {
    throw ConfigError("resample: rate ratio too fine-grained (reduce to L <= 4096)");
  }

  constexpr int kHalfWidth = 32;  // -> 64 taps per phase
  constexpr double kKaiserBeta = 5.0;
  const double cutoff_hz = 0.45 * std::min(x.sample_rate, target_rate);
  const double fc = cutoff_hz / x.sample_rate;  // cycles per input sample
  const double i0_beta = detail::bessel_i0(kKaiserBeta);
  const double kPi = 3.14159265358979323846;

  // taps[phase][j] weights x[base + j], base = floor(t) - kHalfWidth + 1,
  // where t = n * down / up and phase = (n * down) mod up.
  std::vector<std::vector<double>> taps(static_cast<std::size_t>(up));
  for (std::int64_t p = 0; p < up; ++p) {
    auto& row = taps[static_cast<std::size_t>(p)];
    row.resize(2 * kHalfWidth);
    double sum = 0.0;
    for (int j = 0; j < 2 * kHalfWidth; ++j) {
      const double tau = static_cast<double>(p) / static_cast<double>(up) + kHalfWidth - 1 - j;
      const double u = 2.0 * fc * tau;
      const double sinc = (std::abs(u) < 1e-12) ? 1.0 : std::sin(kPi * u) / (kPi * u);
      const double frac = tau / kHalfWidth;
      const double kaiser =
          (std::abs(frac) <= 1.0)
              ? detail::bessel_i0(kKaiserBeta * std::sqrt(1.0 - frac * frac)) / i0_beta
              : 0.0;
      row[static_cast<std::size_t>(j)] = 2.0 * fc * sinc * kaiser;
      sum += row[static_cast<std::size_t>(j)];
    }
    for (double& v : row) v /= sum;
  }

  const std::int64_t n_in = static_cast<std::int64_t>(x.samples.size());
  const std::int64_t n_out = static_cast<std::int64_t>(
      (static_cast<__int128>(n_in) * up * 2 + down) / (2 * static_cast<__int128>(down)));

  Waveform y;
  y.sample_rate = target_rate;
  y.samples.resize(static_cast<std::size_t>(n_out));
  for (std::int64_t n = 0; n < n_out; ++n) {
    const std::int64_t num = n * down;
    const std::int64_t q = num / up;
    const std::int64_t phase = num % up;
    const std::int64_t base = q - kHalfWidth + 1;
    const auto& row = taps[static_cast<std::size_t>(phase)];
    double acc = 0.0;
    for (int j = 0; j < 2 * kHalfWidth; ++j) {
      const std::int64_t k = base + j;
      if (k >= 0 && k < n_in) acc += x.samples[static_cast<std::size_t>(k)] * row[static_cast<std::size_t>(j)];
    }
    y.samples[static_cast<std::size_t>(n)] = acc;
  }
  return y;
}

// Complex ideal ratio mask: clean / mix per bin, with the denominator
// magnitude floored at kMaskEpsilon and the mask magnitude clipped.
inline ComplexMask ideal_complex_mask(const Spectrogram& clean, const Spectrogram& mix,
                                      double clip = kMaskClip) {
  if (!clean.same_shape(mix)) throw DataError("ideal_complex_mask: shape mismatch");
  ComplexMask m;
  m.frames = clean.frames;
  m.bins = clean.bins;
  m.clip_magnitude = clip;
  m.data.resize(clean.data.size());
  for (std::size_t i = 0; i < m.data.size(); ++i) {
    std::complex<double> denom = mix.data[i];
    const double mag = std::abs(denom);
    if (mag < kMaskEpsilon) {
      denom = (mag == 0.0) ? std::complex<double>(kMaskEpsilon, 0.0)
                           : denom * (kMaskEpsilon / mag);
    }
    std::complex<double> v = clean.data[i] / denom;
    const double vm = std::abs(v);
    if (vm > clip) v *= clip / vm;
    m.data[i] = v;
  }
  return m;
}

// Elementwise complex multiplication of a spectrogram by a mask.
inline Spectrogram apply_mask(const Spectrogram& mix, const ComplexMask& m) {
  if (mix.frames != m.frames || mix.bins != m.bins) {
    throw DataError("apply_mask: shape mismatch");
  }
  Spectrogram out = mix;
  for (std::size_t i = 0; i < out.data.size(); ++i) out.data[i] *= m.data[i];
  return out;
}

}  // namespace denoiselab

#endif  // DENOISELAB_SIGNAL_HPP_
