// src/pipeline.cpp

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

#include "lpcaug/pipeline.hpp"

#include <algorithm>
#include <cmath>

#include "lpcaug/error.hpp"
#include "lpcaug/framing.hpp"
#include "lpcaug/lpc.hpp"
#include "lpcaug/rng.hpp"

namespace lpcaug {

namespace {

double frame_rms(std::span<const double> frame) {
  double acc = 0.0;
  for (double s : frame) acc += s * s;
  return frame.empty() ? 0.0 : std::sqrt(acc / static_cast<double>(frame.size()));
}

double frame_energy(std::span<const double> frame) {
  double acc = 0.0;
  for (double s : frame) acc += s * s;
  return acc;
}

}  // namespace

void validate_config(const AugmentConfig& cfg) {
  if (!(cfg.warp_lo > 0.0) || !(cfg.warp_lo <= cfg.warp_hi))
    throw Error(Errc::invalid_range, "warp range must satisfy 0 < lo <= hi");
  if (!(cfg.window_ms > 0.0) || !(cfg.hop_ms > 0.0) || cfg.hop_ms > cfg.window_ms)
    throw Error(Errc::invalid_config, "window/hop must satisfy 0 < hop <= window");
  if (!(cfg.silence_rms_threshold > 0.0))
    throw Error(Errc::invalid_config, "silence threshold must be positive");
  if (!(cfg.peak_limit > 0.0) || cfg.peak_limit > 1.0)
    throw Error(Errc::invalid_config, "peak limit must lie in (0, 1]");
}

FrameResult augment_frame(std::span<const double> frame, const WarpPlan& plan, int order,
                          std::vector<WarpAuditEntry>* audit) {
  try {
    const std::vector<double> r = autocorrelate(frame, order);
    const LpcModel model = levinson_durbin(r);
    const std::vector<double> residual = inverse_filter(frame, model);
    const std::vector<std::complex<double>> roots = find_roots(model);
    const PoleSet poles = classify_and_sort(roots);
    const PoleSet warped = warp_poles(poles, plan, audit);
    const LpcModel warped_model{model.order, poly_from_roots(warped), model.residual_energy};
    return {allpole_filter(residual, warped_model), false};
  } catch (const Error& e) {
    if (!is_frame_degeneracy(e.code())) throw;
    return {std::vector<double>(frame.begin(), frame.end()), true};
  }
}

UtteranceResult augment_utterance(const AudioBuffer& buffer, const AugmentConfig& cfg,
                                  const UtteranceSeed& seed, bool collect_audit) {
  validate_config(cfg);
  const int order = compute_lpc_order(buffer.sample_rate);
  const WarpPlan plan =
      sample_warp_factors(cfg.warp_lo, cfg.warp_hi, order / 2,
                          derive_seed(seed.global_seed, seed.utterance_id, seed.copy_index));
  return augment_utterance_with_plan(buffer, cfg, plan, collect_audit);
}

UtteranceResult augment_utterance_with_plan(const AudioBuffer& buffer, const AugmentConfig& cfg,
                                            const WarpPlan& plan, bool collect_audit) {
  validate_config(cfg);
  const int order = compute_lpc_order(buffer.sample_rate);

  UtteranceResult res;
  res.plan = plan;
  res.audio.sample_rate = buffer.sample_rate;

  const std::size_t frame_len = frame_length_samples(cfg.window_ms, buffer.sample_rate);
  if (buffer.samples.size() < frame_len) {
    res.audio.samples = buffer.samples;
    res.too_short = true;
    return res;
  }
  if (frame_len < 2 * static_cast<std::size_t>(order))
    throw Error(Errc::invalid_config, "window shorter than twice the LPC order");

  const FramedSignal framed = frame_signal(buffer, {cfg.window_ms, cfg.hop_ms});
  res.frames_total = static_cast<int>(framed.frames.size());

  std::vector<std::vector<double>> out_frames;
  out_frames.reserve(framed.frames.size());
  for (std::size_t j = 0; j < framed.frames.size(); ++j) {
    const std::vector<double>& frame = framed.frames[j];
    if (frame_rms(frame) < cfg.silence_rms_threshold) {
      ++res.passthrough_frames;
      out_frames.push_back(frame);
      continue;
    }
    std::vector<WarpAuditEntry> entries;
    FrameResult fr = augment_frame(frame, plan, order, collect_audit ? &entries : nullptr);
    if (fr.passthrough) {
      ++res.passthrough_frames;
    } else if (cfg.energy_match) {
      const double e_in = frame_energy(frame);
      const double e_out = frame_energy(fr.samples);
      if (e_out > 1e-30) {
        const double g = std::sqrt(e_in / e_out);
        for (double& s : fr.samples) s *= g;
      }
    }
    if (collect_audit && !fr.passthrough)
      res.audit.push_back({static_cast<int>(j), std::move(entries)});
    out_frames.push_back(std::move(fr.samples));
  }

  res.audio.samples = overlap_add(out_frames, framed.grid, buffer.samples.size());

  double peak = 0.0;
  for (double s : res.audio.samples) peak = std::max(peak, std::abs(s));
  if (peak > cfg.peak_limit) {
    const double g = cfg.peak_limit / peak;
    for (double& s : res.audio.samples) s *= g;
    res.clipped = true;
  }
  return res;
}

}  // namespace lpcaug
