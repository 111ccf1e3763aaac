// src/lpc.cpp

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

#include "lpcaug/lpc.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <numbers>

#include "lpcaug/error.hpp"

namespace lpcaug {

int compute_lpc_order(int sample_rate) {
  if (sample_rate <= 0) throw Error(Errc::invalid_config, "sample rate must be positive");
  return static_cast<int>(std::lround(sample_rate / 1000.0)) + 2;
}

std::vector<double> autocorrelate(std::span<const double> frame, int order) {
  if (frame.empty()) throw Error(Errc::invalid_config, "empty frame");
  if (order < 0 || static_cast<std::size_t>(order) >= frame.size())
    throw Error(Errc::invalid_config, "autocorrelation order must be < frame length");
  std::vector<double> r(static_cast<std::size_t>(order) + 1, 0.0);
  const std::size_t n = frame.size();
  for (int k = 0; k <= order; ++k) {
    double acc = 0.0;
    for (std::size_t i = 0; i + k < n; ++i) acc += frame[i] * frame[i + k];
    r[k] = acc;
  }
  r[0] *= 1.0 + 1e-9;
  return r;
}

LpcModel levinson_durbin(std::span<const double> r) {
  if (r.size() < 2) throw Error(Errc::invalid_config, "need at least lags r[0], r[1]");
  // Inverted comparison so NaN input lands in the degenerate branch too.
  if (!(r[0] > 0.0)) throw Error(Errc::degenerate_frame, "non-positive frame energy");

  const int order = static_cast<int>(r.size()) - 1;
  std::vector<double> a(order, 0.0);
  std::vector<double> prev(order, 0.0);
  double err = r[0];
  for (int m = 1; m <= order; ++m) {
    double acc = r[m];
    for (int i = 1; i < m; ++i) acc -= a[i - 1] * r[m - i];
    const double k = acc / err;
    if (!(std::abs(k) < 1.0))
      throw Error(Errc::numerical_degeneracy, "reflection coefficient left (-1, 1)");
    std::copy(a.begin(), a.begin() + (m - 1), prev.begin());
    a[m - 1] = k;
    for (int i = 1; i < m; ++i) a[i - 1] = prev[i - 1] - k * prev[m - 1 - i];
    err *= 1.0 - k * k;
  }
  return LpcModel{order, std::move(a), err};
}

std::vector<double> inverse_filter(std::span<const double> frame, const LpcModel& model) {
  const std::size_t n = frame.size();
  const int p = model.order;
  std::vector<double> e(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = frame[i];
    const int kmax = static_cast<int>(std::min<std::size_t>(p, i));
    for (int k = 1; k <= kmax; ++k) acc -= model.coeffs[k - 1] * frame[i - k];
    e[i] = acc;
  }
  return e;
}

std::vector<double> allpole_filter(std::span<const double> residual, const LpcModel& model) {
  const std::size_t n = residual.size();
  const int p = model.order;
  std::vector<double> s(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = residual[i];
    const int kmax = static_cast<int>(std::min<std::size_t>(p, i));
    for (int k = 1; k <= kmax; ++k) acc += model.coeffs[k - 1] * s[i - k];
    s[i] = acc;
  }
  return s;
}

SpectralEnvelope lpc_envelope(const LpcModel& model, int sample_rate, int n_bins) {
  if (sample_rate <= 0) throw Error(Errc::invalid_config, "sample rate must be positive");
  if (n_bins < 16) throw Error(Errc::invalid_config, "envelope needs at least 16 bins");
  SpectralEnvelope env;
  env.freqs_hz.resize(n_bins);
  env.magnitude_db.resize(n_bins);
  const double two_pi = 2.0 * std::numbers::pi;
  for (int i = 0; i < n_bins; ++i) {
    const double w = std::numbers::pi * i / (n_bins - 1);
    std::complex<double> a(1.0, 0.0);
    for (int k = 1; k <= model.order; ++k)
      a -= model.coeffs[k - 1] * std::polar(1.0, -w * k);
    const double mag = std::max(std::abs(a), 1e-12);
    env.freqs_hz[i] = w * sample_rate / two_pi;
    env.magnitude_db[i] = -20.0 * std::log10(mag);
  }
  return env;
}

std::vector<Peak> pick_formant_peaks(const SpectralEnvelope& env, int max_peaks) {
  if (env.freqs_hz.size() != env.magnitude_db.size())
    throw Error(Errc::invalid_config, "envelope freq/magnitude length mismatch");
  const auto& m = env.magnitude_db;
  const int n = static_cast<int>(m.size());
  if (max_peaks <= 0 || n < 3) return {};

  constexpr double kMinProminenceDb = 1.0;
  constexpr double kMinSpacingHz = 100.0;

  struct Cand {
    int bin;
    double db;
  };
  std::vector<Cand> cands;
  for (int i = 1; i + 1 < n; ++i) {
    if (!(m[i] > m[i - 1] && m[i] > m[i + 1])) continue;
    // Prominence: drop to the lowest point between the peak and the
    // nearest higher ground on each side (or the spectrum edge).
    double left_min = m[i];
    for (int j = i - 1; j >= 0 && m[j] <= m[i]; --j) left_min = std::min(left_min, m[j]);
    double right_min = m[i];
    for (int j = i + 1; j < n && m[j] <= m[i]; ++j) right_min = std::min(right_min, m[j]);
    if (m[i] - std::max(left_min, right_min) >= kMinProminenceDb) cands.push_back({i, m[i]});
  }

  std::stable_sort(cands.begin(), cands.end(),
                   [](const Cand& a, const Cand& b) { return a.db > b.db; });
  std::vector<Cand> kept;
  for (const Cand& c : cands) {
    bool clear = true;
    for (const Cand& k : kept)
      if (std::abs(env.freqs_hz[c.bin] - env.freqs_hz[k.bin]) < kMinSpacingHz) {
        clear = false;
        break;
      }
    if (clear) kept.push_back(c);
  }
  std::sort(kept.begin(), kept.end(), [](const Cand& a, const Cand& b) { return a.bin < b.bin; });
  if (static_cast<int>(kept.size()) > max_peaks) kept.resize(max_peaks);

  std::vector<Peak> peaks;
  peaks.reserve(kept.size());
  for (const Cand& c : kept) peaks.push_back({env.freqs_hz[c.bin], c.db});
  return peaks;
}

void write_envelope_csv(const SpectralEnvelope& env, const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::trunc);
  if (!os) throw Error(Errc::io_failure, "cannot write " + path.string());
  os << "freq_hz,magnitude_db\n";
  os.precision(10);
  for (std::size_t i = 0; i < env.freqs_hz.size(); ++i)
    os << env.freqs_hz[i] << ',' << env.magnitude_db[i] << '\n';
  if (!os) throw Error(Errc::io_failure, "write failed for " + path.string());
}

}  // namespace lpcaug
