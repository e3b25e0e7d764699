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

#ifndef DENOISELAB_SYNTH_HPP_
#define DENOISELAB_SYNTH_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "denoiselab/random.hpp"
#include "denoiselab/wave.hpp"

namespace denoiselab {

// Synthetic stand-ins that keep the whole pipeline runnable without any
// external audio. "Speech" is an AM-modulated harmonic complex with a
// drifting fundamental and syllabic pauses; "noise" is lowpass-filtered
// broadband noise. Both are deterministic under their seed.

inline Waveform synth_speech(double seconds, std::uint64_t seed, int rate = kCanonicalRate) {
  Rng rng(derive_seed(seed, 0x53504545u));
  const double f0_base = rng.uniform(100.0, 220.0);
  const double vibrato_hz = rng.uniform(0.3, 0.8);
  const double syllable_hz = rng.uniform(2.5, 4.5);
  const double syllable_phase = rng.uniform(0.0, 6.28318530717958647692);
  const int n_harmonics = 12;

  Waveform w;
  w.sample_rate = rate;
  w.samples.resize(static_cast<std::size_t>(seconds * rate));
  const double kTau = 6.28318530717958647692;
  double phase = rng.uniform(0.0, kTau);
  for (std::size_t i = 0; i < w.samples.size(); ++i) {
    const double t = static_cast<double>(i) / rate;
    const double f0 = f0_base * (1.0 + 0.08 * std::sin(kTau * vibrato_hz * t));
    phase += kTau * f0 / rate;
    // Syllabic envelope with hard pauses between bursts.
    const double gate = std::sin(kTau * syllable_hz * t + syllable_phase);
    const double env = gate > 0.0 ? std::pow(gate, 0.7) : 0.0;
    double v = 0.0;
    for (int h = 1; h <= n_harmonics; ++h) {
      if (h * f0 > 0.42 * rate) break;
      v += std::sin(h * phase) / h;
    }
    w.samples[i] = 0.15 * env * v;
  }
  return w;
}

inline Waveform synth_noise(double seconds, std::uint64_t seed, int rate = kCanonicalRate) {
  Rng rng(derive_seed(seed, 0x4e4f4953u));
  const double cutoff_hz = rng.uniform(800.0, 4000.0);
  const double alpha = std::exp(-2.0 * 3.14159265358979323846 * cutoff_hz / rate);

  Waveform w;
  w.sample_rate = rate;
  w.samples.resize(static_cast<std::size_t>(seconds * rate));
  double state = 0.0;
  for (auto& v : w.samples) {
    state = alpha * state + (1.0 - alpha) * rng.uniform(-1.0, 1.0);
    v = 8.0 * state;  // make up for the lowpass attenuation
  }
  return w;
}

}  // namespace denoiselab

#endif  // DENOISELAB_SYNTH_HPP_
