// include/lpcaug/framing.hpp

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

#pragma once

#include <cstddef>
#include <vector>

#include "lpcaug/audio_buffer.hpp"

namespace lpcaug {

/// Short-time analysis geometry. Defaults give 20 ms Hamming frames at
/// 50% overlap.
struct FramingConfig {
  double window_ms = 20.0;
  double hop_ms = 10.0;
};

/// Frame placement of one analysis pass: start indices on the sample
/// axis plus the (constant) frame length and hop in samples.
struct FrameGrid {
  std::vector<std::size_t> starts;
  std::size_t frame_len = 0;
  std::size_t hop = 0;
};

struct FramedSignal {
  std::vector<std::vector<double>> frames;  // already windowed
  FrameGrid grid;
};

/// Symmetric Hamming window, 0.54 - 0.46*cos(2*pi*n/(L-1)).
/// Endpoints are exactly 0.08; all values lie in (0, 1].
std::vector<double> hamming_window(std::size_t len);

std::size_t frame_length_samples(double window_ms, int sample_rate);
std::size_t hop_length_samples(double hop_ms, int sample_rate);

/// Cuts the buffer into hop-spaced frames of one window length, each
/// multiplied by the Hamming window. The final partial frame is
/// zero-padded so output length can match input length after
/// reassembly. Throws Errc::buffer_too_short for buffers shorter than
/// one window.
FramedSignal frame_signal(const AudioBuffer& buffer, const FramingConfig& cfg);

/// Reassembles frames at their grid positions and divides pointwise by
/// the sum of shifted analysis windows, which makes the unmodified
/// round trip exact. Positions with window sum below 1e-6 emit zero
/// (never reached with a Hamming window, whose floor is 0.08).
std::vector<double> overlap_add(const std::vector<std::vector<double>>& frames,
                                const FrameGrid& grid, std::size_t out_len);

}  // namespace lpcaug
