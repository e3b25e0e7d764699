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

// Test-only reference implementations. Everything here is written straight
// from the defining formula (quadratic DFT, exhaustive enumeration, ...) and
// stays independent of the library code paths it cross-checks.

#ifndef DENOISELAB_TESTS_ORACLES_HPP_
#define DENOISELAB_TESTS_ORACLES_HPP_

#include <algorithm>
#include <complex>
#include <cstdint>
#include <numeric>
#include <vector>

#include "denoiselab/random.hpp"
#include "denoiselab/wave.hpp"

namespace oracles {

// Quadratic-time DFT of one windowed frame; one-sided output.
inline std::vector<std::complex<double>> frame_dft(const std::vector<double>& frame) {
  const std::size_t n = frame.size();
  std::vector<std::complex<double>> out(n / 2 + 1);
  const double kTau = 6.28318530717958647692;
  for (std::size_t k = 0; k < out.size(); ++k) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
      const double phi = -kTau * static_cast<double>(k) * static_cast<double>(i) /
                         static_cast<double>(n);
      acc += frame[i] * std::complex<double>(std::cos(phi), std::sin(phi));
    }
    out[k] = acc;
  }
  return out;
}

inline std::vector<double> hann_periodic(std::size_t n) {
  std::vector<double> w(n);
  const double kTau = 6.28318530717958647692;
  for (std::size_t i = 0; i < n; ++i) w[i] = 0.5 - 0.5 * std::cos(kTau * i / n);
  return w;
}

inline denoiselab::Waveform random_waveform(std::size_t n, std::uint64_t seed,
                                            int rate = 22050, double amplitude = 0.3) {
  denoiselab::Rng rng(seed);
  denoiselab::Waveform w;
  w.sample_rate = rate;
  w.samples.resize(n);
  for (auto& v : w.samples) v = rng.uniform(-amplitude, amplitude);
  return w;
}

// Exact two-sided sign-flip p-value for the Wilcoxon signed-rank statistic,
// by enumerating all 2^n sign assignments over the given ranks.
inline double wilcoxon_exact_p(const std::vector<double>& ranks, double w_plus) {
  const std::size_t n = ranks.size();
  const double total = std::accumulate(ranks.begin(), ranks.end(), 0.0);
  const double lo = std::min(w_plus, total - w_plus);
  const double hi = std::max(w_plus, total - w_plus);
  std::uint64_t count = 0;
  const std::uint64_t limit = 1ull << n;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    double w = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1ull << i)) w += ranks[i];
    }
    if (w <= lo + 1e-12 || w >= hi - 1e-12) ++count;
  }
  return static_cast<double>(count) / static_cast<double>(limit);
}

// Exact two-sided p-value for the Mann-Whitney U statistic by enumerating
// all C(n+m, n) group labelings of the pooled sample.
inline double mann_whitney_exact_p(std::vector<double> pooled, std::size_t n_x, double u_x) {
  const std::size_t n = pooled.size();
  std::vector<int> pick(n, 0);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(n_x), 1);
  std::sort(pick.begin(), pick.end());

  // Tie-averaged ranks of the pooled sample are fixed across labelings.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pooled[a] < pooled[b]; });
  std::vector<double> rank(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && pooled[order[j + 1]] == pooled[order[i]]) ++j;
    const double r = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j + 1));
    for (std::size_t k = i; k <= j; ++k) rank[order[k]] = r;
    i = j + 1;
  }

  const double n_y = static_cast<double>(n - n_x);
  const double full = static_cast<double>(n_x) * n_y;
  const double lo = std::min(u_x, full - u_x);
  const double hi = std::max(u_x, full - u_x);
  std::uint64_t count = 0, trials = 0;
  do {
    double rank_sum = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      if (pick[k]) rank_sum += rank[k];
    }
    const double u = rank_sum - static_cast<double>(n_x) * (static_cast<double>(n_x) + 1) / 2.0;
    if (u <= lo + 1e-12 || u >= hi - 1e-12) ++count;
    ++trials;
  } while (std::next_permutation(pick.begin(), pick.end()));
  return static_cast<double>(count) / static_cast<double>(trials);
}

}  // namespace oracles

#endif  // DENOISELAB_TESTS_ORACLES_HPP_
