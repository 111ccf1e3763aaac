// include/lpcaug/lpc.hpp

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
#include <span>
#include <vector>

namespace lpcaug {

/// One frame's linear predictor. Sign convention:
///   A(z) = 1 - sum_{k=1..order} coeffs[k-1] * z^-k
/// so the predictor is s_hat[n] = sum_k coeffs[k-1] * s[n-k].
/// residual_energy is the final prediction error of the recursion.
struct LpcModel {
  int order = 0;
  std::vector<double> coeffs;
  double residual_energy = 0.0;
};

/// Prediction order for a given sample rate: one pole pair per kHz of
/// bandwidth plus two, i.e. round(sample_rate / 1000) + 2.
int compute_lpc_order(int sample_rate);

/// Autocorrelation lags r[0..order]. r[0] is multiplied by (1 + 1e-9)
/// as a white-noise floor so near-silent frames stay well conditioned.
std::vector<double> autocorrelate(std::span<const double> frame, int order);

/// Levinson-Durbin solve of the autocorrelation normal equations.
/// Guarantees a minimum-phase A(z) for positive-definite input. Throws
/// Errc::degenerate_frame when r[0] <= 0 and Errc::numerical_degeneracy
/// when a reflection coefficient reaches magnitude 1.
LpcModel levinson_durbin(std::span<const double> r);

/// FIR analysis filter: e[n] = s[n] - sum_k a_k s[n-k], zero initial
/// state. Output length equals input length.
std::vector<double> inverse_filter(std::span<const double> frame, const LpcModel& model);

/// All-pole synthesis filter: s[n] = e[n] + sum_k a_k s[n-k], zero
/// initial state. Exact inverse of inverse_filter for the same model.
std::vector<double> allpole_filter(std::span<const double> residual, const LpcModel& model);

struct SpectralEnvelope {
  std::vector<double> freqs_hz;
  std::vector<double> magnitude_db;
};

/// LPC spectral envelope 20*log10 |1/A(e^jw)| on n_bins points spanning
/// [0, sample_rate/2]. No gain term: the envelope is relative, peak
/// locations are the quantity of interest. |A| is floored at 1e-12.
SpectralEnvelope lpc_envelope(const LpcModel& model, int sample_rate, int n_bins);

struct Peak {
  double freq_hz = 0.0;
  double magnitude_db = 0.0;
};

/// Local envelope maxima with prominence >= 1 dB and pairwise spacing
/// >= 100 Hz (stronger peak wins a conflict), sorted by frequency
/// ascending and truncated to max_peaks. May be empty.
std::vector<Peak> pick_formant_peaks(const SpectralEnvelope& env, int max_peaks);

/// CSV export, header "freq_hz,magnitude_db", one row per bin.
void write_envelope_csv(const SpectralEnvelope& env, const std::filesystem::path& path);

}  // namespace lpcaug
