// src/analyze.cpp

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

#include "lpcaug/analyze.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "lpcaug/error.hpp"
#include "lpcaug/framing.hpp"
#include "lpcaug/rng.hpp"

namespace lpcaug {

namespace {

double frame_rms(const std::vector<double>& frame) {
  double acc = 0.0;
  for (double s : frame) acc += s * s;
  return frame.empty() ? 0.0 : std::sqrt(acc / static_cast<double>(frame.size()));
}

WarpPlan forced_plan(const std::vector<double>& factors, int count) {
  if (factors.empty()) throw Error(Errc::invalid_range, "forced factor vector is empty");
  WarpPlan plan;
  plan.factors.reserve(count);
  for (int i = 0; i < count; ++i) plan.factors.push_back(factors[i % factors.size()]);
  const auto [lo, hi] = std::minmax_element(plan.factors.begin(), plan.factors.end());
  plan.range_lo = *lo;
  plan.range_hi = *hi;
  if (!(plan.range_lo > 0.0))
    throw Error(Errc::invalid_range, "forced factors must be positive");
  return plan;
}

}  // namespace

AnalyzeResult analyze_buffer(const AudioBuffer& buffer, const AugmentConfig& cfg,
                             const AnalyzeOptions& options, const std::string& utterance_id) {
  validate_config(cfg);
  const int order = compute_lpc_order(buffer.sample_rate);
  const FramedSignal framed = frame_signal(buffer, {cfg.window_ms, cfg.hop_ms});

  int best = -1;
  double best_rms = 0.0;
  for (std::size_t j = 0; j < framed.frames.size(); ++j) {
    const double rms = frame_rms(framed.frames[j]);
    if (rms > best_rms) {
      best_rms = rms;
      best = static_cast<int>(j);
    }
  }
  if (best < 0 || best_rms < cfg.silence_rms_threshold)
    throw Error(Errc::no_voiced_frame, "no frame above the silence threshold");

  const std::vector<double> r = autocorrelate(framed.frames[best], order);
  const LpcModel model = levinson_durbin(r);
  const PoleSet poles = classify_and_sort(find_roots(model));

  AnalyzeResult res;
  res.frame_index = best;
  res.plan = options.forced_factors
                 ? forced_plan(*options.forced_factors, order / 2)
                 : sample_warp_factors(cfg.warp_lo, cfg.warp_hi, order / 2,
                                       derive_seed(options.global_seed, utterance_id, 1));

  const PoleSet warped = warp_poles(poles, res.plan);
  const LpcModel warped_model{model.order, poly_from_roots(warped), model.residual_energy};

  res.before = lpc_envelope(model, buffer.sample_rate, options.n_bins);
  res.after = lpc_envelope(warped_model, buffer.sample_rate, options.n_bins);

  const std::vector<Peak> peaks_before = pick_formant_peaks(res.before, options.max_peaks);
  const std::vector<Peak> peaks_after = pick_formant_peaks(res.after, options.max_peaks);
  const std::size_t n = std::min(peaks_before.size(), peaks_after.size());
  for (std::size_t k = 0; k < n; ++k)
    res.shifts.push_back({static_cast<int>(k), peaks_before[k].freq_hz, peaks_after[k].freq_hz,
                          peaks_after[k].freq_hz - peaks_before[k].freq_hz});
  return res;
}

void write_peak_table_csv(std::span<const PeakShift> shifts, const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::trunc);
  if (!os) throw Error(Errc::io_failure, "cannot write peak table " + path.string());
  os << "peak_index,freq_before_hz,freq_after_hz,shift_hz\n";
  os.precision(10);
  for (const PeakShift& s : shifts)
    os << s.peak_index << ',' << s.freq_before_hz << ',' << s.freq_after_hz << ',' << s.shift_hz
       << '\n';
  if (!os) throw Error(Errc::io_failure, "write failed for peak table " + path.string());
}

}  // namespace lpcaug
