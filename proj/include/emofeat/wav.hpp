// emofeat/wav.hpp

// Copyright 2026  emofeat authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef EMOFEAT_WAV_HPP_
#define EMOFEAT_WAV_HPP_

#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "emofeat/core.hpp"

namespace emofeat {

/// Mono audio in [-1, 1].
struct AudioSignal {
  std::vector<double> samples;
  int sample_rate = 0;

  double duration() const {
    return sample_rate > 0 ? static_cast<double>(samples.size()) / sample_rate : 0.0;
  }
};

namespace wav_detail {

inline std::uint32_t ReadU32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}
inline std::uint16_t ReadU16(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

}  // namespace wav_detail

/// Reads a RIFF WAV file (PCM 16-bit). Stereo input is downmixed by
/// averaging the channels.
inline AudioSignal ReadWav(const std::string& path) {
  using namespace wav_detail;
  std::ifstream in(path, std::ios::binary);
  if (!in) Raise(Errc::kMissingFile, "cannot open wav: " + path);
  std::vector<unsigned char> data((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (data.size() < 44 || std::memcmp(data.data(), "RIFF", 4) != 0 ||
      std::memcmp(data.data() + 8, "WAVE", 4) != 0) {
    Raise(Errc::kParseError, path + ": not a RIFF/WAVE file");
  }

  int channels = 0, bits = 0, rate = 0;
  std::size_t samples_offset = 0, samples_bytes = 0;
  std::size_t pos = 12;
  while (pos + 8 <= data.size()) {
    const std::uint32_t chunk_size = ReadU32(data.data() + pos + 4);
    if (std::memcmp(data.data() + pos, "fmt ", 4) == 0 && pos + 8 + 16 <= data.size()) {
      const unsigned char* fmt = data.data() + pos + 8;
      const int format = ReadU16(fmt);
      channels = ReadU16(fmt + 2);
      rate = static_cast<int>(ReadU32(fmt + 4));
      bits = ReadU16(fmt + 14);
      if (format != 1) Raise(Errc::kParseError, path + ": only PCM wav supported");
    } else if (std::memcmp(data.data() + pos, "data", 4) == 0) {
      samples_offset = pos + 8;
      samples_bytes = std::min<std::size_t>(chunk_size, data.size() - samples_offset);
    }
    pos += 8 + chunk_size + (chunk_size & 1);
  }
  if (channels < 1 || channels > 2 || bits != 16 || rate <= 0 || samples_offset == 0) {
    Raise(Errc::kParseError, path + ": expected 16-bit PCM mono or stereo");
  }

  AudioSignal signal;
  signal.sample_rate = rate;
  const std::size_t frame_bytes = static_cast<std::size_t>(channels) * 2;
  const std::size_t n = samples_bytes / frame_bytes;
  signal.samples.resize(n);
  const unsigned char* p = data.data() + samples_offset;
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int c = 0; c < channels; ++c) {
      const std::int16_t s =
          static_cast<std::int16_t>(ReadU16(p + i * frame_bytes + static_cast<std::size_t>(c) * 2));
      acc += static_cast<double>(s) / 32768.0;
    }
    signal.samples[i] = acc / channels;
  }
  return signal;
}

/// Writes mono PCM 16-bit. Values are clipped to [-1, 1].
inline void WriteWav(const AudioSignal& signal, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) Raise(Errc::kIoError, "cannot write wav: " + path);
  const std::uint32_t data_bytes = static_cast<std::uint32_t>(signal.samples.size() * 2);
  auto put_u32 = [&out](std::uint32_t v) {
    char b[4] = {static_cast<char>(v), static_cast<char>(v >> 8), static_cast<char>(v >> 16),
                 static_cast<char>(v >> 24)};
    out.write(b, 4);
  };
  auto put_u16 = [&out](std::uint16_t v) {
    char b[2] = {static_cast<char>(v), static_cast<char>(v >> 8)};
    out.write(b, 2);
  };
  out.write("RIFF", 4);
  put_u32(36 + data_bytes);
  out.write("WAVE", 4);
  out.write("fmt ", 4);
  put_u32(16);
  put_u16(1);  // PCM
  put_u16(1);  // mono
  put_u32(static_cast<std::uint32_t>(signal.sample_rate));
  put_u32(static_cast<std::uint32_t>(signal.sample_rate * 2));
  put_u16(2);
  put_u16(16);
  out.write("data", 4);
  put_u32(data_bytes);
  for (double v : signal.samples) {
    double clipped = std::min(1.0, std::max(-1.0, v));
    auto s = static_cast<std::int16_t>(std::lround(clipped * 32767.0));
    put_u16(static_cast<std::uint16_t>(s));
  }
}

}  // namespace emofeat

#endif  // EMOFEAT_WAV_HPP_
