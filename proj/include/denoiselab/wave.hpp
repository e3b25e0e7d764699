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

#ifndef DENOISELAB_WAVE_HPP_
#define DENOISELAB_WAVE_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "denoiselab/errors.hpp"

namespace denoiselab {

// Canonical internal sample rate. Everything downstream of ingestion runs
// at this rate.
constexpr int kCanonicalRate = 22050;

// Mono time-domain signal. Full scale is the [-1, 1] range; samples may
// exceed it transiently (e.g. hot mixtures stored as float), PCM writes
// clamp.
struct Waveform {
  std::vector<double> samples;
  int sample_rate = kCanonicalRate;

  std::size_t size() const { return samples.size(); }
  double duration_s() const {
    return static_cast<double>(samples.size()) / sample_rate;
  }
};

namespace detail {

inline std::uint32_t read_u32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

inline std::uint16_t read_u16(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

inline void put_u32(std::string& out, std::uint32_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
  out.push_back(static_cast<char>((v >> 16) & 0xff));
  out.push_back(static_cast<char>((v >> 24) & 0xff));
}

inline void put_u16(std::string& out, std::uint16_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
}

inline float f32_from_bits(std::uint32_t bits) {
  float f;
  std::memcpy(&f, &bits, sizeof f);
  return f;
}

inline std::uint32_t bits_from_f32(float f) {
  std::uint32_t bits;
  std::memcpy(&bits, &f, sizeof bits);
  return bits;
}

}  // namespace detail

// Reads a RIFF/WAVE file. Supports 16-bit PCM and 32-bit IEEE float, mono
// or stereo; stereo is downmixed to mono by channel averaging.
inline Waveform read_wav(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open WAV file: " + path);
  std::vector<unsigned char> raw((std::istreambuf_iterator<char>(in)),
                                 std::istreambuf_iterator<char>());
  if (raw.size() < 44 || std::memcmp(raw.data(), "RIFF", 4) != 0 ||
      std::memcmp(raw.data() + 8, "WAVE", 4) != 0) {
    throw DataError("not a RIFF/WAVE file: " + path);
  }

  int format = 0, channels = 0, bits = 0, rate = 0;
  std::size_t data_off = 0, data_len = 0;
  std::size_t pos = 12;
  while (pos + 8 <= raw.size()) {
    const std::uint32_t chunk_len = detail::read_u32(raw.data() + pos + 4);
    const bool is_fmt = std::memcmp(raw.data() + pos, "fmt ", 4) == 0;
    const bool is_data = std::memcmp(raw.data() + pos, "data", 4) == 0;
    const std::size_t body = pos + 8;
    if (is_fmt && body + 16 <= raw.size()) {
      format = detail::read_u16(raw.data() + body);
      channels = detail::read_u16(raw.data() + body + 2);
      rate = static_cast<int>(detail::read_u32(raw.data() + body + 4));
      bits = detail::read_u16(raw.data() + body + 14);
    } else if (is_data) {
      data_off = body;
      data_len = std::min<std::size_t>(chunk_len, raw.size() - body);
    }
    pos = body + chunk_len + (chunk_len & 1);  // chunks are word-aligned
  }

  if (data_off == 0) throw DataError("WAV file has no data chunk: " + path);
  if (channels < 1 || channels > 2) {
    throw DataError("unsupported channel count in " + path);
  }
  if (rate <= 0) throw DataError("invalid sample rate in " + path);
  const bool pcm16 = format == 1 && bits == 16;
  const bool float32 = format == 3 && bits == 32;
  if (!pcm16 && !float32) {
    throw DataError("unsupported WAV encoding (want 16-bit PCM or 32-bit float): " + path);
  }

  const std::size_t bytes_per_sample = pcm16 ? 2 : 4;
  const std::size_t frame_bytes = bytes_per_sample * channels;
  const std::size_t n_frames = data_len / frame_bytes;

  Waveform w;
  w.sample_rate = rate;
  w.samples.resize(n_frames);
  const unsigned char* d = raw.data() + data_off;
  for (std::size_t i = 0; i < n_frames; ++i) {
    double acc = 0.0;
    for (int c = 0; c < channels; ++c) {
      const unsigned char* s = d + i * frame_bytes + c * bytes_per_sample;
      if (pcm16) {
        const std::int16_t v = static_cast<std::int16_t>(detail::read_u16(s));
        acc += static_cast<double>(v) / 32768.0;
      } else {
        acc += static_cast<double>(detail::f32_from_bits(detail::read_u32(s)));
      }
    }
    w.samples[i] = acc / channels;
  }
  for (double v : w.samples) {
    if (!std::isfinite(v)) throw DataError("non-finite sample in " + path);
  }
  return w;
}

// Writes a mono WAV file: 32-bit IEEE float by default, 16-bit PCM (with
// clamping) when pcm16 is set.
inline void write_wav(const std::string& path, const Waveform& w, bool pcm16 = false) {
  const std::size_t n = w.samples.size();
  const std::uint16_t bytes_per_sample = pcm16 ? 2 : 4;
  const std::uint32_t data_len = static_cast<std::uint32_t>(n * bytes_per_sample);

  std::string out;
  out.reserve(60 + data_len);
  out.append("RIFF");
  detail::put_u32(out, 36 + data_len + (pcm16 ? 0 : 0));
  out.append("WAVE");
  out.append("fmt ");
  detail::put_u32(out, 16);
  detail::put_u16(out, pcm16 ? 1 : 3);  // PCM or IEEE float
  detail::put_u16(out, 1);              // mono
  detail::put_u32(out, static_cast<std::uint32_t>(w.sample_rate));
  detail::put_u32(out, static_cast<std::uint32_t>(w.sample_rate) * bytes_per_sample);
  detail::put_u16(out, bytes_per_sample);
  detail::put_u16(out, pcm16 ? 16 : 32);
  out.append("data");
  detail::put_u32(out, data_len);
  for (double v : w.samples) {
    if (pcm16) {
      const long q = std::clamp<long>(std::lround(v * 32768.0), -32768, 32767);
      detail::put_u16(out, static_cast<std::uint16_t>(static_cast<std::int16_t>(q)));
    } else {
      detail::put_u32(out, detail::bits_from_f32(static_cast<float>(v)));
    }
  }

  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw DataError("cannot write WAV file: " + path);
  f.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!f) throw DataError("short write to WAV file: " + path);
}

}  // namespace denoiselab

#endif  // DENOISELAB_WAVE_HPP_
