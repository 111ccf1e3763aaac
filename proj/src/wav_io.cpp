// src/wav_io.cpp

// Copyright 2026 The lpcaug Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lpcaug/wav_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

#include "lpcaug/error.hpp"

namespace lpcaug {

namespace {

constexpr std::uint16_t kFormatPcm = 0x0001;
constexpr std::uint16_t kFormatFloat = 0x0003;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

std::uint32_t read_u32(const std::uint8_t* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint16_t read_u16(const std::uint8_t* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
  out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xff));
  out.push_back(static_cast<std::uint8_t>((v >> 16) & 0xff));
  out.push_back(static_cast<std::uint8_t>((v >> 24) & 0xff));
}

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
  out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xff));
}

struct FmtChunk {
  std::uint16_t format = 0;
  std::uint16_t channels = 0;
  std::uint32_t sample_rate = 0;
  std::uint16_t bits_per_sample = 0;
  std::uint16_t block_align = 0;
};

double decode_sample(const std::uint8_t* p, const FmtChunk& fmt) {
  switch (fmt.bits_per_sample) {
    case 16: {
      const auto v = static_cast<std::int16_t>(read_u16(p));
      return static_cast<double>(v) / 32768.0;
    }
    case 24: {
      std::int32_t v = static_cast<std::int32_t>(p[0]) | (static_cast<std::int32_t>(p[1]) << 8) |
                       (static_cast<std::int32_t>(p[2]) << 16);
      if (v & 0x800000) v |= ~0xFFFFFF;  // sign extend
      return static_cast<double>(v) / 8388608.0;
    }
    case 32: {
      if (fmt.format == kFormatFloat) {
        float f;
        std::uint32_t bits = read_u32(p);
        std::memcpy(&f, &bits, sizeof(f));
        return std::isfinite(f) ? static_cast<double>(f) : 0.0;
      }
      const auto v = static_cast<std::int32_t>(read_u32(p));
      return static_cast<double>(v) / 2147483648.0;
    }
    default:
      return 0.0;  // unreachable, rejected earlier
  }
}

}  // namespace

AudioBuffer load_wav(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::file_missing, "cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  in.close();

  if (bytes.empty()) throw Error(Errc::empty_audio, path.string() + " is empty");
  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0)
    throw Error(Errc::unsupported_encoding, path.string() + " is not a RIFF/WAVE file");

  FmtChunk fmt;
  bool have_fmt = false;
  std::size_t data_offset = 0;
  std::size_t data_size = 0;

  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const std::uint8_t* hdr = bytes.data() + pos;
    const std::uint32_t chunk_size = read_u32(hdr + 4);
    const std::size_t body = pos + 8;
    if (std::memcmp(hdr, "fmt ", 4) == 0 && body + 16 <= bytes.size()) {
      const std::uint8_t* f = bytes.data() + body;
      fmt.format = read_u16(f);
      fmt.channels = read_u16(f + 2);
      fmt.sample_rate = read_u32(f + 4);
      fmt.block_align = read_u16(f + 12);
      fmt.bits_per_sample = read_u16(f + 14);
      if (fmt.format == kFormatExtensible && chunk_size >= 40 && body + 26 <= bytes.size()) {
        // first two bytes of the SubFormat GUID carry the real format tag
        fmt.format = read_u16(f + 24);
      }
      have_fmt = true;
    } else if (std::memcmp(hdr, "data", 4) == 0) {
      data_offset = body;
      data_size = std::min<std::size_t>(chunk_size, bytes.size() - body);
      break;
    }
    pos = body + chunk_size + (chunk_size & 1);  // chunks are word-aligned
  }

  if (!have_fmt || data_offset == 0)
    throw Error(Errc::unsupported_encoding, path.string() + " has no fmt/data chunks");
  if (fmt.channels == 0 || fmt.sample_rate == 0)
    throw Error(Errc::unsupported_encoding, path.string() + " has a malformed fmt chunk");

  const bool int_ok = fmt.format == kFormatPcm && (fmt.bits_per_sample == 16 ||
                                                   fmt.bits_per_sample == 24 ||
                                                   fmt.bits_per_sample == 32);
  const bool float_ok = fmt.format == kFormatFloat && fmt.bits_per_sample == 32;
  if (!int_ok && !float_ok)
    throw Error(Errc::unsupported_encoding,
                path.string() + ": unsupported encoding (format " + std::to_string(fmt.format) +
                    ", " + std::to_string(fmt.bits_per_sample) + " bit)");

  const std::size_t bytes_per_sample = fmt.bits_per_sample / 8;
  const std::size_t stride = bytes_per_sample * fmt.channels;
  const std::size_t n_frames = stride > 0 ? data_size / stride : 0;
  if (n_frames == 0) throw Error(Errc::empty_audio, path.string() + " contains no audio");

  AudioBuffer buffer;
  buffer.sample_rate = static_cast<int>(fmt.sample_rate);
  buffer.samples.resize(n_frames);
  const std::uint8_t* data = bytes.data() + data_offset;
  for (std::size_t n = 0; n < n_frames; ++n) {
    double sum = 0.0;
    for (std::uint16_t c = 0; c < fmt.channels; ++c)
      sum += decode_sample(data + n * stride + c * bytes_per_sample, fmt);
    buffer.samples[n] = sum / fmt.channels;
  }
  return buffer;
}

void save_wav(const AudioBuffer& buffer, const std::filesystem::path& path) {
  const std::size_t n = buffer.samples.size();
  const std::uint32_t data_size = static_cast<std::uint32_t>(n * 2);

  std::vector<std::uint8_t> out;
  out.reserve(44 + data_size);
  out.insert(out.end(), {'R', 'I', 'F', 'F'});
  put_u32(out, 36 + data_size);
  out.insert(out.end(), {'W', 'A', 'V', 'E'});
  out.insert(out.end(), {'f', 'm', 't', ' '});
  put_u32(out, 16);
  put_u16(out, kFormatPcm);
  put_u16(out, 1);  // mono
  put_u32(out, static_cast<std::uint32_t>(buffer.sample_rate));
  put_u32(out, static_cast<std::uint32_t>(buffer.sample_rate) * 2);
  put_u16(out, 2);   // block align
  put_u16(out, 16);  // bits per sample
  out.insert(out.end(), {'d', 'a', 't', 'a'});
  put_u32(out, data_size);
  for (std::size_t i = 0; i < n; ++i) {
    long long q = std::llround(buffer.samples[i] * 32768.0);
    q = std::clamp(q, -32768ll, 32767ll);
    put_u16(out, static_cast<std::uint16_t>(static_cast<std::int16_t>(q)));
  }

  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw Error(Errc::io_failure, "cannot write " + path.string());
  os.write(reinterpret_cast<const char*>(out.data()), static_cast<std::streamsize>(out.size()));
  if (!os) throw Error(Errc::io_failure, "write failed for " + path.string());
}

}  // namespace lpcaug
