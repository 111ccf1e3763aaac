// src/framing.cpp

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

#include "lpcaug/framing.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "lpcaug/error.hpp"

namespace lpcaug {

namespace {

void validate_framing(const FramingConfig& cfg, int sample_rate) {
  if (sample_rate <= 0) throw Error(Errc::invalid_config, "sample rate must be positive");
  if (!(cfg.window_ms > 0.0))
    throw Error(Errc::invalid_config, "window length must be positive");
  if (!(cfg.hop_ms > 0.0) || cfg.hop_ms > cfg.window_ms)
    throw Error(Errc::invalid_config, "hop must satisfy 0 < hop <= window");
}

}  // namespace

std::vector<double> hamming_window(std::size_t len) {
  if (len < 2) throw Error(Errc::invalid_config, "window length must be >= 2 samples");
  std::vector<double> w(len);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(len - 1);
  for (std::size_t n = 0; n < len; ++n)
    w[n] = 0.54 - 0.46 * std::cos(step * static_cast<double>(n));
  return w;
}

std::size_t frame_length_samples(double window_ms, int sample_rate) {
  return static_cast<std::size_t>(std::llround(window_ms * sample_rate / 1000.0));
}

std::size_t hop_length_samples(double hop_ms, int sample_rate) {
  return static_cast<std::size_t>(std::llround(hop_ms * sample_rate / 1000.0));
}

FramedSignal frame_signal(const AudioBuffer& buffer, const FramingConfig& cfg) {
  validate_framing(cfg, buffer.sample_rate);
  const std::size_t frame_len = frame_length_samples(cfg.window_ms, buffer.sample_rate);
  const std::size_t hop = hop_length_samples(cfg.hop_ms, buffer.sample_rate);
  if (frame_len < 2 || hop < 1)
    throw Error(Errc::invalid_config, "window/hop too short at this sample rate");

  const std::size_t len = buffer.samples.size();
  if (len < frame_len)
    throw Error(Errc::buffer_too_short,
                "buffer of " + std::to_string(len) + " samples is shorter than one window (" +
                    std::to_string(frame_len) + ")");

  // ceil((len - frame_len) / hop) + 1
  const std::size_t n_frames = (len - frame_len + hop - 1) / hop + 1;
  const std::vector<double> window = hamming_window(frame_len);

  FramedSignal out;
  out.grid.frame_len = frame_len;
  out.grid.hop = hop;
  out.grid.starts.reserve(n_frames);
  out.frames.reserve(n_frames);
  for (std::size_t j = 0; j < n_frames; ++j) {
    const std::size_t start = j * hop;
    out.grid.starts.push_back(start);
    std::vector<double> frame(frame_len, 0.0);
    const std::size_t avail = len > start ? std::min(frame_len, len - start) : 0;
    for (std::size_t i = 0; i < avail; ++i) frame[i] = buffer.samples[start + i] * window[i];
    out.frames.push_back(std::move(frame));
  }
  return out;
}

std::vector<double> overlap_add(const std::vector<std::vector<double>>& frames,
                                const FrameGrid& grid, std::size_t out_len) {
  if (frames.size() != grid.starts.size())
    throw Error(Errc::grid_mismatch, "frame count does not match grid");
  for (const auto& f : frames)
    if (f.size() != grid.frame_len)
      throw Error(Errc::grid_mismatch, "frame length does not match grid");

  const std::vector<double> window =
      grid.frame_len >= 2 ? hamming_window(grid.frame_len) : std::vector<double>{};
  std::vector<double> acc(out_len, 0.0);
  std::vector<double> wsum(out_len, 0.0);
  for (std::size_t j = 0; j < frames.size(); ++j) {
    const std::size_t start = grid.starts[j];
    for (std::size_t i = 0; i < grid.frame_len; ++i) {
      const std::size_t n = start + i;
      if (n >= out_len) break;
      acc[n] += frames[j][i];
      wsum[n] += window[i];
    }
  }
  std::vector<double> out(out_len, 0.0);
  for (std::size_t n = 0; n < out_len; ++n)
    out[n] = wsum[n] < 1e-6 ? 0.0 : acc[n] / wsum[n];
  return out;
}

}  // namespace lpcaug
