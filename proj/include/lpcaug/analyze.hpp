// include/lpcaug/analyze.hpp

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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "lpcaug/audio_buffer.hpp"
#include "lpcaug/lpc.hpp"
#include "lpcaug/pipeline.hpp"

namespace lpcaug {

struct AnalyzeOptions {
  int n_bins = 512;
  int max_peaks = 5;
  std::uint64_t global_seed = 0;
  // Explicit factor vector bypassing the PRNG; shorter vectors are
  // cycled over the pole pairs.
  std::optional<std::vector<double>> forced_factors;
};

struct PeakShift {
  int peak_index = 0;
  double freq_before_hz = 0.0;
  double freq_after_hz = 0.0;
  double shift_hz = 0.0;
};

struct AnalyzeResult {
  int frame_index = 0;
  SpectralEnvelope before;
  SpectralEnvelope after;
  std::vector<PeakShift> shifts;  // k-th before-peak paired with k-th after-peak
  WarpPlan plan;
};

/// Formant-shift report for one utterance: picks the highest-RMS frame,
/// fits its LPC model, warps the poles with the configured (or forced)
/// factors, and returns pre/post envelopes plus a paired peak table.
/// Throws Errc::no_voiced_frame when every frame is below the silence
/// threshold.
AnalyzeResult analyze_buffer(const AudioBuffer& buffer, const AugmentConfig& cfg,
                             const AnalyzeOptions& options, const std::string& utterance_id);

/// CSV export of the peak table, header
/// peak_index,freq_before_hz,freq_after_hz,shift_hz.
void write_peak_table_csv(std::span<const PeakShift> shifts, const std::filesystem::path& path);

}  // namespace lpcaug
