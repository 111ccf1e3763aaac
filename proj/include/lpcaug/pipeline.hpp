// include/lpcaug/pipeline.hpp

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
#include <span>
#include <string>
#include <vector>

#include "lpcaug/audio_buffer.hpp"
#include "lpcaug/pole_warp.hpp"

namespace lpcaug {

struct AugmentConfig {
  double warp_lo = 0.8;
  double warp_hi = 1.2;
  double window_ms = 20.0;
  double hop_ms = 10.0;
  double silence_rms_threshold = 1e-5;  // full-scale RMS below which frames pass through
  double peak_limit = 0.999;
  bool energy_match = false;  // rescale each perturbed frame to the source frame energy
};

/// Identity of one augmented copy. The warp factors for the copy are
/// drawn from derive_seed(global_seed, utterance_id, copy_index), so
/// distinct copies get independent draws and reruns are reproducible
/// regardless of scheduling.
struct UtteranceSeed {
  std::uint64_t global_seed = 0;
  std::string utterance_id;
  std::uint64_t copy_index = 0;
};

struct FrameResult {
  std::vector<double> samples;
  bool passthrough = false;
};

struct FrameAudit {
  int frame_index = 0;
  std::vector<WarpAuditEntry> pairs;
};

struct UtteranceResult {
  AudioBuffer audio;
  WarpPlan plan;
  int frames_total = 0;
  int passthrough_frames = 0;
  bool clipped = false;    // peak limiter engaged
  bool too_short = false;  // input shorter than one window, returned unmodified
  std::vector<FrameAudit> audit;
};

void validate_config(const AugmentConfig& cfg);

/// One windowed frame through the full chain: autocorrelation, LPC
/// solve, inverse filtering to the residual, root extraction, pole
/// classification, phase warping, polynomial rebuild, and all-pole
/// resynthesis. Any per-frame degeneracy (silence, root failure,
/// conjugacy violation) returns the input unchanged with the
/// passthrough flag set; no error escapes.
FrameResult augment_frame(std::span<const double> frame, const WarpPlan& plan, int order,
                          std::vector<WarpAuditEntry>* audit = nullptr);

/// Whole-utterance augmentation: draws one warp plan from the seed,
/// holds it constant across all frames, frames/warps/overlap-adds, and
/// peak-limits the result. Output length always equals input length,
/// and the result is a pure function of (buffer, cfg, seed). Inputs
/// shorter than one window come back unmodified with too_short set.
UtteranceResult augment_utterance(const AudioBuffer& buffer, const AugmentConfig& cfg,
                                  const UtteranceSeed& seed, bool collect_audit = false);

/// Same, with an externally supplied warp plan (controlled experiments,
/// forced factors). plan.factors must cover floor(order/2) pairs.
UtteranceResult augment_utterance_with_plan(const AudioBuffer& buffer, const AugmentConfig& cfg,
                                            const WarpPlan& plan, bool collect_audit = false);

}  // namespace lpcaug
