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

#include "denoiselab/wave.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <cstdio>
#include <filesystem>

#include "oracles.hpp"

using denoiselab::DataError;
using denoiselab::read_wav;
using denoiselab::Waveform;
using denoiselab::write_wav;

namespace {

std::string temp_path(const char* name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("float32 wav round trip is exact at float precision") {
  Waveform w = oracles::random_waveform(4001, 7);
  const std::string path = temp_path("dlab_f32.wav");
  write_wav(path, w);
  const Waveform r = read_wav(path);
  REQUIRE(r.sample_rate == w.sample_rate);
  REQUIRE(r.samples.size() == w.samples.size());
  for (std::size_t i = 0; i < w.samples.size(); ++i) {
    REQUIRE(r.samples[i] == Catch::Approx(w.samples[i]).margin(1e-7));
  }
  std::remove(path.c_str());
}

TEST_CASE("pcm16 wav round trip is exact at 16-bit precision") {
  Waveform w = oracles::random_waveform(2000, 8, 16000, 0.9);
  const std::string path = temp_path("dlab_p16.wav");
  write_wav(path, w, /*pcm16=*/true);
  const Waveform r = read_wav(path);
  REQUIRE(r.sample_rate == 16000);
  for (std::size_t i = 0; i < w.samples.size(); ++i) {
    REQUIRE(r.samples[i] == Catch::Approx(w.samples[i]).margin(1.0 / 32767.0));
  }
  std::remove(path.c_str());
}

TEST_CASE("stereo pcm16 is downmixed by channel averaging") {
  // Hand-build a 2-channel PCM16 file: left = 16384, right = -16384.
  std::string body;
  auto u16 = [&](unsigned v) {
    body.push_back(static_cast<char>(v & 0xff));
    body.push_back(static_cast<char>((v >> 8) & 0xff));
  };
  auto u32 = [&](unsigned long v) {
    for (int i = 0; i < 4; ++i) body.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
  };
  const int frames = 10;
  body.append("RIFF");
  u32(36 + frames * 4);
  body.append("WAVE");
  body.append("fmt ");
  u32(16);
  u16(1);
  u16(2);
  u32(8000);
  u32(8000 * 4);
  u16(4);
  u16(16);
  body.append("data");
  u32(frames * 4);
  for (int i = 0; i < frames; ++i) {
    u16(16384);
    u16(static_cast<unsigned>(static_cast<std::uint16_t>(-16384)));
  }
  const std::string path = temp_path("dlab_stereo.wav");
  {
    std::ofstream f(path, std::ios::binary);
    f.write(body.data(), static_cast<std::streamsize>(body.size()));
  }
  const Waveform r = read_wav(path);
  REQUIRE(r.samples.size() == 10);
  for (double v : r.samples) REQUIRE(v == Catch::Approx(0.0).margin(1e-12));
  std::remove(path.c_str());
}

TEST_CASE("unsupported or broken wav files raise DataError") {
  const std::string path = temp_path("dlab_bad.wav");
  {
    std::ofstream f(path, std::ios::binary);
    f << "not a wav file at all";
  }
  REQUIRE_THROWS_AS(read_wav(path), DataError);
  REQUIRE_THROWS_AS(read_wav(temp_path("dlab_missing_file.wav")), DataError);
  std::remove(path.c_str());
}
