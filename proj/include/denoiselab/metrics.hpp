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

#ifndef DENOISELAB_METRICS_HPP_
#define DENOISELAB_METRICS_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "denoiselab/errors.hpp"
#include "denoiselab/signal.hpp"
#include "denoiselab/wave.hpp"

namespace denoiselab {

// Objective quality/intelligibility features of a (clean, degraded) pair.
// A sub-metric that is undefined for the given pair is stored as 0.0 with
// its flag bit set; consumers must treat flagged entries as missing.
struct MetricVector {
  double snr = 0.0;             // dB, capped to +-100
  double seg_snr = 0.0;         // dB, clamped per frame to [-10, 35]
  double spectral_mse = 0.0;
  double mean_log_error = 0.0;
  double wss = 0.0;
  double cep = 0.0;
  double stoi = 0.0;            // [0, 1]
  unsigned flags = 0;

  enum Flag : unsigned {
    kSegSnrUndefined = 1u << 0,
    kWssUndefined = 1u << 1,
    kCepUndefined = 1u << 2,
    kStoiUndefined = 1u << 3,
  };

  std::array<double, 7> features() const {
    return {snr, seg_snr, spectral_mse, mean_log_error, wss, cep, stoi};
  }
  static constexpr std::array<const char*, 7> feature_names() {
    return {"snr", "seg_snr", "spectral_mse", "mean_log_error", "wss", "cep", "stoi"};
  }
};

// ---------------------------------------------------------------------------
// Waveform-level SNR

inline double global_snr(const Waveform& clean, const Waveform& degraded) {
  if (clean.samples.size() != degraded.samples.size()) {
    throw DataError("global_snr: length mismatch");
  }
  if (clean.samples.empty()) throw DataError("global_snr: empty signals");
  double sig = 0.0, err = 0.0;
  for (std::size_t i = 0; i < clean.samples.size(); ++i) {
    const double d = degraded.samples[i] - clean.samples[i];
    sig += clean.samples[i] * clean.samples[i];
    err += d * d;
  }
  if (err < 1e-20) return 100.0;
  if (sig <= 0.0) return -100.0;
  return std::clamp(10.0 * std::log10(sig / err), -100.0, 100.0);
}

// Mean of per-frame SNRs (frame 512, 50% overlap), each clamped to
// [clamp_lo, clamp_hi]; frames whose clean level is below -60 dBFS are
// excluded as silence.
inline double segmental_snr(const Waveform& clean, const Waveform& degraded,
                            int frame = 512, double clamp_lo = -10.0,
                            double clamp_hi = 35.0) {
  if (clean.samples.size() != degraded.samples.size()) {
    throw DataError("segmental_snr: length mismatch");
  }
  const int hop = frame / 2;
  const std::size_t n = clean.samples.size();
  if (n < static_cast<std::size_t>(frame)) {
    throw NumericError("segmental_snr: no voiced frames");
  }
  const double gate_energy = std::pow(10.0, -60.0 / 10.0) * frame;  // -60 dBFS RMS
  double sum = 0.0;
  std::size_t voiced = 0;
  for (std::size_t start = 0; start + frame <= n; start += hop) {
    double sig = 0.0, err = 0.0;
    for (int i = 0; i < frame; ++i) {
      const double c = clean.samples[start + static_cast<std::size_t>(i)];
      const double d = degraded.samples[start + static_cast<std::size_t>(i)] - c;
      sig += c * c;
      err += d * d;
    }
    if (sig < gate_energy) continue;
    const double snr = (err <= 0.0) ? clamp_hi : 10.0 * std::log10(sig / err);
    sum += std::clamp(snr, clamp_lo, clamp_hi);
    ++voiced;
  }
  if (voiced == 0) throw NumericError("segmental_snr: no voiced frames");
  return sum / static_cast<double>(voiced);
}

// ---------------------------------------------------------------------------
// Spectrogram distances

inline double spectral_mse(const Spectrogram& clean, const Spectrogram& degraded) {
  if (!clean.same_shape(degraded)) throw DataError("spectral_mse: shape mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < clean.data.size(); ++i) {
    acc += std::norm(clean.data[i] - degraded.data[i]);
  }
  return acc / static_cast<double>(clean.data.size());
}

constexpr double kLogErrorDelta = 1e-8;

inline double mean_log_error(const Spectrogram& clean, const Spectrogram& degraded) {
  if (!clean.same_shape(degraded)) throw DataError("mean_log_error: shape mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < clean.data.size(); ++i) {
    acc += std::abs(std::log(std::abs(clean.data[i]) + kLogErrorDelta) -
                    std::log(std::abs(degraded.data[i]) + kLogErrorDelta));
  }
  return acc / static_cast<double>(clean.data.size());
}

// ---------------------------------------------------------------------------
// Weighted spectral slope distance

namespace detail {

// 25 critical bands (center / bandwidth in Hz) of the classical speech
// quality literature.
inline const std::array<double, 25>& wss_center_freqs() {
  static const std::array<double, 25> cf = {
      50.0,    120.0,   190.0,   260.0,   330.0,   400.0,   470.0,  540.0,  617.372,
      703.378, 798.717, 904.128, 1020.38, 1148.30, 1288.72, 1442.54, 1610.70,
      1794.16, 1993.93, 2211.08, 2446.71, 2701.97, 2978.04, 3276.17, 3597.63};
  return cf;
}

inline const std::array<double, 25>& wss_bandwidths() {
  static const std::array<double, 25> bw = {
      70.0,    70.0,    70.0,    70.0,    70.0,    70.0,    70.0,   77.3724, 86.0056,
      95.3398, 105.411, 116.256, 127.914, 140.423, 153.823, 168.154, 183.457,
      199.776, 217.153, 235.631, 255.255, 276.072, 298.126, 321.465, 346.136};
  return bw;
}

// Trapezoidal band weight: flat within half a bandwidth of the center,
// linear rolloff to zero over the next half bandwidth.
inline double trapezoid_weight(double f, double center, double bw) {
  const double d = std::abs(f - center);
  if (d <= 0.5 * bw) return 1.0;
  if (d >= bw) return 0.0;
  return (bw - d) / (0.5 * bw);
}

// Critical-band log spectrum of one windowed frame's power spectrum.
inline std::array<double, 25> critical_band_db(const std::vector<double>& power,
                                               int fft_len, int sample_rate) {
  const auto& cf = wss_center_freqs();
  const auto& bw = wss_bandwidths();
  std::array<double, 25> out{};
  for (int b = 0; b < 25; ++b) {
    double e = 0.0;
    for (std::size_t k = 0; k < power.size(); ++k) {
      const double f = static_cast<double>(k) * sample_rate / fft_len;
      e += trapezoid_weight(f, cf[static_cast<std::size_t>(b)], bw[static_cast<std::size_t>(b)]) *
           power[k];
    }
    out[static_cast<std::size_t>(b)] = 10.0 * std::log10(std::max(e, 1e-30));
  }
  return out;
}

// Slope weights following the spectral-slope distance formulation: a global
// term against the spectral maximum and a local term against the nearest
// peak, with K_max = 20 dB and K_locmax = 1 dB.
inline std::array<double, 24> wss_weights(const std::array<double, 25>& band_db) {
  std::array<double, 24> slope{};
  for (int i = 0; i < 24; ++i) {
    slope[static_cast<std::size_t>(i)] =
        band_db[static_cast<std::size_t>(i) + 1] - band_db[static_cast<std::size_t>(i)];
  }
  const double db_max = *std::max_element(band_db.begin(), band_db.end());
  std::array<double, 24> w{};
  for (int i = 0; i < 24; ++i) {
    double peak;
    if (slope[static_cast<std::size_t>(i)] > 0.0) {
      int j = i;
      while (j < 24 && slope[static_cast<std::size_t>(j)] > 0.0) ++j;
      peak = band_db[static_cast<std::size_t>(j)];
    } else {
      int j = i;
      while (j > 0 && slope[static_cast<std::size_t>(j) - 1] <= 0.0) --j;
      peak = band_db[static_cast<std::size_t>(j)];
    }
    const double w_max = 20.0 / (20.0 + db_max - band_db[static_cast<std::size_t>(i)]);
    const double w_loc = 1.0 / (1.0 + peak - band_db[static_cast<std::size_t>(i)]);
    w[static_cast<std::size_t>(i)] = w_max * w_loc;
  }
  return w;
}

inline std::vector<std::vector<double>> frame_power_spectra(const Waveform& x, int frame,
                                                            int hop) {
  const std::vector<double> window = hann_window(frame);
  const Fft fft(static_cast<std::size_t>(frame));
  std::vector<std::vector<double>> out;
  std::vector<std::complex<double>> buf(static_cast<std::size_t>(frame));
  for (std::size_t start = 0; start + static_cast<std::size_t>(frame) <= x.samples.size();
       start += static_cast<std::size_t>(hop)) {
    for (int i = 0; i < frame; ++i) {
      buf[static_cast<std::size_t>(i)] = {
          x.samples[start + static_cast<std::size_t>(i)] * window[static_cast<std::size_t>(i)],
          0.0};
    }
    fft.forward(buf.data());
    std::vector<double> power(static_cast<std::size_t>(frame) / 2 + 1);
    for (std::size_t k = 0; k < power.size(); ++k) power[k] = std::norm(buf[k]);
    out.push_back(std::move(power));
  }
  return out;
}

}  // namespace detail

// Weighted spectral slope distance over 25 critical bands; lower is better
// and identical inputs score 0.
inline double wss(const Waveform& clean, const Waveform& degraded, int frame = 512) {
  if (clean.samples.size() != degraded.samples.size()) {
    throw DataError("wss: length mismatch");
  }
  if (clean.samples.size() < static_cast<std::size_t>(frame)) {
    throw DataError("wss: input shorter than one frame");
  }
  const int hop = frame / 2;
  const auto clean_frames = detail::frame_power_spectra(clean, frame, hop);
  const auto deg_frames = detail::frame_power_spectra(degraded, frame, hop);

  double total = 0.0;
  for (std::size_t t = 0; t < clean_frames.size(); ++t) {
    const auto cdb = detail::critical_band_db(clean_frames[t], frame, clean.sample_rate);
    const auto ddb = detail::critical_band_db(deg_frames[t], frame, degraded.sample_rate);
    const auto wc = detail::wss_weights(cdb);
    const auto wd = detail::wss_weights(ddb);
    double num = 0.0, den = 0.0;
    for (int i = 0; i < 24; ++i) {
      const double sc = cdb[static_cast<std::size_t>(i) + 1] - cdb[static_cast<std::size_t>(i)];
      const double sd = ddb[static_cast<std::size_t>(i) + 1] - ddb[static_cast<std::size_t>(i)];
      const double w = 0.5 * (wc[static_cast<std::size_t>(i)] + wd[static_cast<std::size_t>(i)]);
      num += w * (sc - sd) * (sc - sd);
      den += w;
    }
    total += num / den;
  }
  return total / static_cast<double>(clean_frames.size());
}

// ---------------------------------------------------------------------------
// LPC cepstral distance

// Biased autocorrelation estimates r[0..max_lag].
inline std::vector<double> autocorrelation(const std::vector<double>& x, int max_lag) {
  std::vector<double> r(static_cast<std::size_t>(max_lag) + 1, 0.0);
  for (int k = 0; k <= max_lag; ++k) {
    double acc = 0.0;
    for (std::size_t n = 0; n + static_cast<std::size_t>(k) < x.size(); ++n) {
      acc += x[n] * x[n + static_cast<std::size_t>(k)];
    }
    r[static_cast<std::size_t>(k)] = acc / static_cast<double>(x.size());
  }
  return r;
}

// Levinson-Durbin recursion. Returns predictor coefficients a[1..order]
// (so an AR(1) process x[n] = 0.9 x[n-1] + e[n] recovers ~0.9 in a[0]).
// Throws NumericError when the normal equations are numerically singular.
inline std::vector<double> levinson_durbin(const std::vector<double>& r, int order) {
  if (static_cast<int>(r.size()) < order + 1) {
    throw ConfigError("levinson_durbin: need order+1 autocorrelation lags");
  }
  if (r[0] < 1e-12) throw NumericError("levinson_durbin: zero-energy frame");
  std::vector<double> a(static_cast<std::size_t>(order), 0.0);
  std::vector<double> prev(static_cast<std::size_t>(order), 0.0);
  double err = r[0];
  for (int k = 1; k <= order; ++k) {
    double acc = r[static_cast<std::size_t>(k)];
    for (int j = 1; j < k; ++j) {
      acc -= a[static_cast<std::size_t>(j) - 1] * r[static_cast<std::size_t>(k - j)];
    }
    const double reflection = acc / err;
    prev = a;
    a[static_cast<std::size_t>(k) - 1] = reflection;
    for (int j = 1; j < k; ++j) {
      a[static_cast<std::size_t>(j) - 1] =
          prev[static_cast<std::size_t>(j) - 1] - reflection * prev[static_cast<std::size_t>(k - j) - 1];
    }
    err *= (1.0 - reflection * reflection);
    if (!(err > 0.0)) throw NumericError("levinson_durbin: singular recursion");
  }
  return a;
}

// Cepstral coefficients c[1..p] of the all-pole model with predictor a.
inline std::vector<double> lpc_cepstrum(const std::vector<double>& a) {
  const int p = static_cast<int>(a.size());
  std::vector<double> c(static_cast<std::size_t>(p), 0.0);
  for (int m = 1; m <= p; ++m) {
    double acc = a[static_cast<std::size_t>(m) - 1];
    for (int k = 1; k < m; ++k) {
      acc += (static_cast<double>(k) / m) * c[static_cast<std::size_t>(k) - 1] *
             a[static_cast<std::size_t>(m - k) - 1];
    }
    c[static_cast<std::size_t>(m) - 1] = acc;
  }
  return c;
}

// Mean LPC-cepstrum distance (order 10) over voiced frames, in the standard
// 10/ln10 * sqrt(2 sum d^2) form. Frames where either signal's recursion is
// singular are skipped.
inline double cepstral_distance(const Waveform& clean, const Waveform& degraded,
                                int frame = 512, int order = 10) {
  if (clean.samples.size() != degraded.samples.size()) {
    throw DataError("cepstral_distance: length mismatch");
  }
  if (clean.samples.size() < static_cast<std::size_t>(frame)) {
    throw NumericError("cepstral_distance: undefined (no frames)");
  }
  const int hop = frame / 2;
  const std::vector<double> window = hann_window(frame);
  double total = 0.0;
  std::size_t used = 0;
  std::vector<double> cw(static_cast<std::size_t>(frame)), dw(static_cast<std::size_t>(frame));
  for (std::size_t start = 0; start + static_cast<std::size_t>(frame) <= clean.samples.size();
       start += static_cast<std::size_t>(hop)) {
    for (int i = 0; i < frame; ++i) {
      cw[static_cast<std::size_t>(i)] =
          clean.samples[start + static_cast<std::size_t>(i)] * window[static_cast<std::size_t>(i)];
      dw[static_cast<std::size_t>(i)] =
          degraded.samples[start + static_cast<std::size_t>(i)] * window[static_cast<std::size_t>(i)];
    }
    try {
      const auto cc = lpc_cepstrum(levinson_durbin(autocorrelation(cw, order), order));
      const auto cd = lpc_cepstrum(levinson_durbin(autocorrelation(dw, order), order));
      double sq = 0.0;
      for (int k = 0; k < order; ++k) {
        const double d = cc[static_cast<std::size_t>(k)] - cd[static_cast<std::size_t>(k)];
        sq += d * d;
      }
      total += (10.0 / std::log(10.0)) * std::sqrt(2.0 * sq);
      ++used;
    } catch (const NumericError&) {
      continue;  // singular frame
    }
  }
  if (used == 0) throw NumericError("cepstral_distance: undefined (all frames singular)");
  return total / static_cast<double>(used);
}

// ---------------------------------------------------------------------------
// Short-time objective intelligibility

namespace detail {

struct StoiBands {
  // bands[j] = [lo_bin, hi_bin) of the 512-point transform at 10 kHz
  std::array<std::pair<std::size_t, std::size_t>, 15> bins;
};

inline StoiBands stoi_band_edges() {
  StoiBands b;
  const int fft_len = 512, fs = 10000;
  for (int j = 0; j < 15; ++j) {
    const double cf = 150.0 * std::pow(2.0, j / 3.0);
    const double fl = cf / std::pow(2.0, 1.0 / 6.0);
    const double fr = cf * std::pow(2.0, 1.0 / 6.0);
    std::size_t lo = 0, hi = 0;
    double best_lo = 1e300, best_hi = 1e300;
    for (std::size_t k = 0; k <= fft_len / 2; ++k) {
      const double f = static_cast<double>(k) * fs / fft_len;
      if (std::abs(f - fl) < best_lo) { best_lo = std::abs(f - fl); lo = k; }
      if (std::abs(f - fr) < best_hi) { best_hi = std::abs(f - fr); hi = k; }
    }
    b.bins[static_cast<std::size_t>(j)] = {lo, hi};
  }
  return b;
}

// Removes frames more than 40 dB below the loudest clean frame and
// overlap-adds the survivors back together (both signals share the clean
// signal's frame selection).
inline void stoi_remove_silent_frames(std::vector<double>& x, std::vector<double>& y) {
  const int frame = 256, hop = 128;
  const std::vector<double> window = hann_window(frame);
  std::vector<std::size_t> starts;
  for (std::size_t s = 0; s + frame <= x.size(); s += hop) starts.push_back(s);
  if (starts.empty()) { x.clear(); y.clear(); return; }

  std::vector<double> energy_db(starts.size());
  double max_db = -1e300;
  for (std::size_t t = 0; t < starts.size(); ++t) {
    double e = 0.0;
    for (int i = 0; i < frame; ++i) {
      const double v = x[starts[t] + static_cast<std::size_t>(i)] * window[static_cast<std::size_t>(i)];
      e += v * v;
    }
    energy_db[t] = 10.0 * std::log10(std::max(e, 1e-300));
    max_db = std::max(max_db, energy_db[t]);
  }

  std::vector<double> xs, ys;
  std::size_t count = 0;
  for (std::size_t t = 0; t < starts.size(); ++t) {
    if (energy_db[t] <= max_db - 40.0) continue;
    const std::size_t out_base = count * hop;
    if (xs.size() < out_base + frame) { xs.resize(out_base + frame, 0.0); ys.resize(out_base + frame, 0.0); }
    for (int i = 0; i < frame; ++i) {
      const double w = window[static_cast<std::size_t>(i)];
      xs[out_base + static_cast<std::size_t>(i)] += w * x[starts[t] + static_cast<std::size_t>(i)];
      ys[out_base + static_cast<std::size_t>(i)] += w * y[starts[t] + static_cast<std::size_t>(i)];
    }
    ++count;
  }
  x = std::move(xs);
  y = std::move(ys);
}

}  // namespace detail

// Short-time objective intelligibility: one-third-octave envelope
// correlations between the clean and degraded signal, clamped to [0, 1].
inline double stoi(const Waveform& clean, const Waveform& degraded) {
  if (clean.samples.size() != degraded.samples.size() ||
      clean.sample_rate != degraded.sample_rate) {
    throw DataError("stoi: length or rate mismatch");
  }
  if (clean.duration_s() < 1.0) throw DataError("stoi: signals shorter than 1 s");

  const Waveform x10 = resample(clean, 10000);
  const Waveform y10 = resample(degraded, 10000);
  std::vector<double> x = x10.samples, y = y10.samples;
  detail::stoi_remove_silent_frames(x, y);

  const int frame = 256, hop = 128, fft_len = 512;
  if (x.size() < static_cast<std::size_t>(frame)) {
    throw DataError("stoi: too short after silence removal");
  }

  // TF decomposition into 15 one-third-octave band envelopes.
  const std::vector<double> window = hann_window(frame);
  const Fft fft(static_cast<std::size_t>(fft_len));
  static const detail::StoiBands bands = detail::stoi_band_edges();
  std::vector<std::array<double, 15>> xe, ye;
  std::vector<std::complex<double>> bx(static_cast<std::size_t>(fft_len));
  std::vector<std::complex<double>> by(static_cast<std::size_t>(fft_len));
  for (std::size_t s = 0; s + frame <= x.size(); s += hop) {
    std::fill(bx.begin(), bx.end(), std::complex<double>{});
    std::fill(by.begin(), by.end(), std::complex<double>{});
    for (int i = 0; i < frame; ++i) {
      bx[static_cast<std::size_t>(i)] = x[s + static_cast<std::size_t>(i)] * window[static_cast<std::size_t>(i)];
      by[static_cast<std::size_t>(i)] = y[s + static_cast<std::size_t>(i)] * window[static_cast<std::size_t>(i)];
    }
    fft.forward(bx.data());
    fft.forward(by.data());
    std::array<double, 15> ex{}, ey{};
    for (int j = 0; j < 15; ++j) {
      const auto [lo, hi] = bands.bins[static_cast<std::size_t>(j)];
      double ax = 0.0, ay = 0.0;
      for (std::size_t k = lo; k < hi; ++k) {
        ax += std::norm(bx[k]);
        ay += std::norm(by[k]);
      }
      ex[static_cast<std::size_t>(j)] = std::sqrt(ax);
      ey[static_cast<std::size_t>(j)] = std::sqrt(ay);
    }
    xe.push_back(ex);
    ye.push_back(ey);
  }

  constexpr int kSegment = 30;
  if (xe.size() < kSegment) throw DataError("stoi: too short for one analysis segment");
  const double clip_factor = 1.0 + std::pow(10.0, 15.0 / 20.0) * 0.0 +
                             std::pow(10.0, -15.0 / 20.0);  // 1 + 10^(-beta/20), beta = -15

  double acc = 0.0;
  std::size_t cells = 0;
  std::array<double, kSegment> xs{}, ys{};
  for (std::size_t m = kSegment; m <= xe.size(); ++m) {
    for (int j = 0; j < 15; ++j) {
      double nx = 0.0, ny = 0.0;
      for (int i = 0; i < kSegment; ++i) {
        xs[static_cast<std::size_t>(i)] = xe[m - kSegment + static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        ys[static_cast<std::size_t>(i)] = ye[m - kSegment + static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        nx += xs[static_cast<std::size_t>(i)] * xs[static_cast<std::size_t>(i)];
        ny += ys[static_cast<std::size_t>(i)] * ys[static_cast<std::size_t>(i)];
      }
      const double alpha = std::sqrt(nx) / std::max(std::sqrt(ny), 1e-150);
      double mx = 0.0, my = 0.0;
      for (int i = 0; i < kSegment; ++i) {
        ys[static_cast<std::size_t>(i)] =
            std::min(alpha * ys[static_cast<std::size_t>(i)], clip_factor * xs[static_cast<std::size_t>(i)]);
        mx += xs[static_cast<std::size_t>(i)];
        my += ys[static_cast<std::size_t>(i)];
      }
      mx /= kSegment;
      my /= kSegment;
      double cov = 0.0, vx = 0.0, vy = 0.0;
      for (int i = 0; i < kSegment; ++i) {
        const double dx = xs[static_cast<std::size_t>(i)] - mx;
        const double dy = ys[static_cast<std::size_t>(i)] - my;
        cov += dx * dy;
        vx += dx * dx;
        vy += dy * dy;
      }
      if (vx < 1e-150) continue;  // no clean-envelope information in this cell
      if (vy < 1e-150) {
        ++cells;                  // flat degraded envelope carries nothing
        continue;
      }
      acc += cov / std::sqrt(vx * vy);
      ++cells;
    }
  }
  if (cells == 0) throw DataError("stoi: no valid analysis cells");
  return std::clamp(acc / static_cast<double>(cells), 0.0, 1.0);
}

// ---------------------------------------------------------------------------
// Aggregation

// All seven metrics with default parameters. Sub-metrics that are undefined
// for the pair are flagged and stored as 0.0 rather than failing the whole
// vector.
inline MetricVector metric_vector(const Waveform& clean, const Waveform& degraded) {
  if (clean.samples.size() != degraded.samples.size() ||
      clean.sample_rate != degraded.sample_rate) {
    throw DataError("metric_vector: length or rate mismatch");
  }
  MetricVector m;
  m.snr = global_snr(clean, degraded);

  const Spectrogram cs = stft(clean);
  const Spectrogram ds = stft(degraded);
  m.spectral_mse = spectral_mse(cs, ds);
  m.mean_log_error = mean_log_error(cs, ds);

  try {
    m.seg_snr = segmental_snr(clean, degraded);
  } catch (const NumericError&) {
    m.flags |= MetricVector::kSegSnrUndefined;
  }
  try {
    m.wss = wss(clean, degraded);
  } catch (const DataError&) {
    m.flags |= MetricVector::kWssUndefined;
  }
  try {
    m.cep = cepstral_distance(clean, degraded);
  } catch (const NumericError&) {
    m.flags |= MetricVector::kCepUndefined;
  }
  try {
    m.stoi = stoi(clean, degraded);
  } catch (const DataError&) {
    m.flags |= MetricVector::kStoiUndefined;
  }
  return m;
}

}  // namespace denoiselab

#endif  // DENOISELAB_METRICS_HPP_
