// include/lpcaug/wav_io.hpp

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

#include <filesystem>

#include "lpcaug/audio_buffer.hpp"

namespace lpcaug {

/// Reads a RIFF/WAVE file. Accepts 16/24/32-bit integer PCM and 32-bit
/// float, mono or multichannel (channels are averaged to mono). Integer
/// samples are scaled by 2^(bits-1), so int16 16384 reads as 0.5.
/// Throws Errc::file_missing, Errc::unsupported_encoding, or
/// Errc::empty_audio. No resampling is performed.
AudioBuffer load_wav(const std::filesystem::path& path);

/// Writes mono 16-bit PCM. Samples are quantized by round(32768 * s)
/// and clamped to [-32768, 32767], so a round trip is exact to within
/// one quantization step per sample. Throws Errc::io_failure.
void save_wav(const AudioBuffer& buffer, const std::filesystem::path& path);

}  // namespace lpcaug
