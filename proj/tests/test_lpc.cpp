// tests/test_lpc.cpp

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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "lpcaug/error.hpp"
#include "lpcaug/framing.hpp"
#include "lpcaug/lpc.hpp"
#include "lpcaug/pole_warp.hpp"
#include "support/oracles.hpp"
#include "support/test_signals.hpp"
#include "support/test_util.hpp"

using namespace lpcaug;
using namespace lpcaug::testing;

TEST_CASE("prediction order follows round(rate in kHz) + 2") {
  CHECK(compute_lpc_order(16000) == 18);
  CHECK(compute_lpc_order(8000) == 10);
  CHECK(compute_lpc_order(44100) == 46);
  CHECK_THROWS_AS(compute_lpc_order(0), Error);
}

TEST_CASE("autocorrelation of [1, 1] at order 1") {
  const std::vector<double> r = autocorrelate(std::vector<double>{1.0, 1.0}, 1);
  REQUIRE(r.size() == 2);
  CHECK(r[0] == doctest::Approx(2.0 * (1.0 + 1e-9)).epsilon(1e-15));
  CHECK(r[1] == 1.0);
}

TEST_CASE("autocorrelation of silence and of an impulse") {
  const std::vector<double> zeros = autocorrelate(std::vector<double>(64, 0.0), 4);
  for (double v : zeros) CHECK(v == 0.0);

  std::vector<double> impulse(64, 0.0);
  impulse[0] = 1.0;
  const std::vector<double> r = autocorrelate(impulse, 4);
  CHECK(r[0] == doctest::Approx(1.0).epsilon(1e-8));
  for (std::size_t k = 1; k < r.size(); ++k) CHECK(r[k] == 0.0);
}

TEST_CASE("autocorrelation matches a naive direct sum") {
  const std::vector<double> frame = white_noise(200, 42);
  const std::vector<double> r = autocorrelate(frame, 12);
  for (int k = 0; k <= 12; ++k) {
    double expected = 0.0;
    for (std::size_t i = 0; i + k < frame.size(); ++i) expected += frame[i] * frame[i + k];
    if (k == 0) expected *= 1.0 + 1e-9;
    CHECK(r[k] == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("autocorrelation validates frame and order") {
  CHECK_THROWS_AS(autocorrelate(std::vector<double>{}, 0), Error);
  CHECK_THROWS_AS(autocorrelate(std::vector<double>{1.0, 2.0}, 2), Error);
  CHECK_THROWS_AS(autocorrelate(std::vector<double>{1.0, 2.0}, -1), Error);
}

TEST_CASE("first-order recursion solves the lag-one system analytically") {
  const LpcModel model = levinson_durbin(std::vector<double>{1.0, 0.9});
  REQUIRE(model.order == 1);
  CHECK(model.coeffs[0] == doctest::Approx(0.9).epsilon(1e-15));
  CHECK(model.residual_energy == doctest::Approx(1.0 - 0.81).epsilon(1e-12));
}

TEST_CASE("white autocorrelation yields the zero predictor") {
  std::vector<double> r(11, 0.0);
  r[0] = 1.0;
  const LpcModel model = levinson_durbin(r);
  for (double a : model.coeffs) CHECK(a == 0.0);
  CHECK(model.residual_energy == 1.0);
}

TEST_CASE("degenerate autocorrelations are reported") {
  try {
    levinson_durbin(std::vector<double>{0.0, 0.0, 0.0});
    FAIL("expected a degenerate-frame error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::degenerate_frame);
    CHECK(is_frame_degeneracy(e.code()));
  }
  // Lag-1 magnitude above lag 0 forces |reflection| >= 1.
  CHECK_THROWS_AS(levinson_durbin(std::vector<double>{1.0, 1.5}), Error);
}

TEST_CASE("recursion agrees with a dense Toeplitz solve on 100 AR processes") {
  std::mt19937 gen(2024);
  std::uniform_int_distribution<int> order_dist(2, 18);
  for (int trial = 0; trial < 100; ++trial) {
    const int order = order_dist(gen);
    const std::vector<double> taps =
        random_stable_ar_taps(order, static_cast<std::uint32_t>(900 + trial));
    std::vector<double> x = white_noise(4000, static_cast<std::uint32_t>(trial));
    x = naive_allpole(x, taps);

    const std::vector<double> frame(x.begin() + 1000, x.begin() + 1000 + 2000);
    const std::vector<double> r = autocorrelate(frame, order);
    const LpcModel model = levinson_durbin(r);
    const std::vector<double> oracle = toeplitz_lpc_oracle(r);

    double scale = 0.0;
    for (double a : oracle) scale = std::max(scale, std::abs(a));
    REQUIRE(model.coeffs.size() == oracle.size());
    for (std::size_t k = 0; k < oracle.size(); ++k)
      CHECK(std::abs(model.coeffs[k] - oracle[k]) <= 1e-8 * std::max(scale, 1.0));
  }
}

TEST_CASE("residual energy never exceeds frame energy") {
  for (std::uint32_t seed = 0; seed < 20; ++seed) {
    std::vector<double> x = white_noise(2000, seed);
    x = naive_allpole(x, random_stable_ar_taps(10, seed + 77));
    const std::vector<double> frame(x.begin() + 500, x.begin() + 500 + 400);
    const std::vector<double> r = autocorrelate(frame, 10);
    const LpcModel model = levinson_durbin(r);
    const std::vector<double> e = inverse_filter(frame, model);
    double se = 0.0, ss = 0.0;
    for (double v : e) se += v * v;
    for (double v : frame) ss += v * v;
    CHECK(se <= ss * (1.0 + 1e-9));
    CHECK(model.residual_energy <= r[0]);
  }
}

TEST_CASE("inverse filter of an impulse is the predictor's FIR response") {
  const LpcModel model{1, {0.9}, 0.0};
  std::vector<double> impulse(6, 0.0);
  impulse[0] = 1.0;
  const std::vector<double> e = inverse_filter(impulse, model);
  CHECK(e[0] == 1.0);
  CHECK(e[1] == doctest::Approx(-0.9).epsilon(1e-15));
  for (std::size_t i = 2; i < e.size(); ++i) CHECK(e[i] == 0.0);
}

TEST_CASE("all-pole impulse response of a single 0.9 pole is geometric") {
  const LpcModel model{1, {0.9}, 0.0};
  std::vector<double> impulse(8, 0.0);
  impulse[0] = 1.0;
  const std::vector<double> s = allpole_filter(impulse, model);
  double expected = 1.0;
  for (double v : s) {
    CHECK(v == doctest::Approx(expected).epsilon(1e-12));
    expected *= 0.9;
  }
}

TEST_CASE("zero coefficients make both filters the identity") {
  const LpcModel model{4, {0.0, 0.0, 0.0, 0.0}, 0.0};
  const std::vector<double> frame = white_noise(50, 3);
  CHECK(max_abs_diff(inverse_filter(frame, model), frame) == 0.0);
  CHECK(max_abs_diff(allpole_filter(frame, model), frame) == 0.0);
  const std::vector<double> silent = allpole_filter(std::vector<double>(32, 0.0), model);
  for (double v : silent) CHECK(v == 0.0);
}

TEST_CASE("all-pole filtering inverts the inverse filter exactly") {
  // Orders up to 46 per the cross-check contract at 44.1 kHz.
  for (int order : {2, 10, 18, 46}) {
    std::vector<double> x = white_noise(4000, static_cast<std::uint32_t>(order));
    x = naive_allpole(x, random_stable_ar_taps(order, static_cast<std::uint32_t>(order) + 5));
    const std::vector<double> frame(x.begin() + 2000, x.begin() + 2000 + 882);
    const std::vector<double> r = autocorrelate(frame, order);
    const LpcModel model = levinson_durbin(r);
    const std::vector<double> back = allpole_filter(inverse_filter(frame, model), model);
    CHECK(max_abs_diff(back, frame) < 1e-10);
  }
}

TEST_CASE("zero-coefficient envelope is flat at 0 dB") {
  const LpcModel model{2, {0.0, 0.0}, 1.0};
  const SpectralEnvelope env = lpc_envelope(model, 16000, 64);
  REQUIRE(env.freqs_hz.size() == 64);
  CHECK(env.freqs_hz.front() == 0.0);
  CHECK(env.freqs_hz.back() == doctest::Approx(8000.0).epsilon(1e-12));
  for (std::size_t i = 1; i < env.freqs_hz.size(); ++i)
    CHECK(env.freqs_hz[i] > env.freqs_hz[i - 1]);
  for (double db : env.magnitude_db) CHECK(db == 0.0);
}

TEST_CASE("single resonance puts the envelope argmax at the pole frequency") {
  const double theta = 2.0 * std::numbers::pi * 500.0 / 16000.0;
  const LpcModel model{2, {2.0 * 0.95 * std::cos(theta), -0.95 * 0.95}, 1.0};
  const SpectralEnvelope env = lpc_envelope(model, 16000, 512);

  std::size_t argmax = 0;
  for (std::size_t i = 1; i < env.magnitude_db.size(); ++i)
    if (env.magnitude_db[i] > env.magnitude_db[argmax]) argmax = i;

  const double bin_hz = 8000.0 / 511.0;
  CHECK(std::abs(env.freqs_hz[argmax] - 500.0) <= bin_hz + 1e-9);

  // Dense-grid reference lands on the same frequency.
  const std::vector<double> dense = dense_peak_freqs_hz(model.coeffs, 16000);
  REQUIRE(!dense.empty());
  CHECK(std::abs(env.freqs_hz[argmax] - dense[0]) <= bin_hz + 1e-9);

  // Library bins agree with direct evaluation of |1/A|.
  for (std::size_t i = 0; i < env.magnitude_db.size(); ++i) {
    const double w = std::numbers::pi * static_cast<double>(i) / 511.0;
    CHECK(env.magnitude_db[i] == doctest::Approx(envelope_db_at(model.coeffs, w)).epsilon(1e-9));
  }
}

TEST_CASE("rotating the pole phase moves the envelope peak proportionally") {
  const double theta = 2.0 * std::numbers::pi * 800.0 / 16000.0;
  for (double w : {0.8, 0.9, 1.1, 1.2}) {
    const double rotated = w * theta;
    const LpcModel model{2, {2.0 * 0.95 * std::cos(rotated), -0.95 * 0.95}, 1.0};
    const SpectralEnvelope env = lpc_envelope(model, 16000, 512);
    std::size_t argmax = 0;
    for (std::size_t i = 1; i < env.magnitude_db.size(); ++i)
      if (env.magnitude_db[i] > env.magnitude_db[argmax]) argmax = i;
    CHECK(std::abs(env.freqs_hz[argmax] - w * 800.0) <= 8000.0 / 511.0 + 1e-9);
  }
}

TEST_CASE("envelope rejects too few bins") {
  const LpcModel model{1, {0.5}, 1.0};
  CHECK_THROWS_AS(lpc_envelope(model, 16000, 15), Error);
  CHECK_THROWS_AS(lpc_envelope(model, 0, 64), Error);
}

namespace {

// Cascade of resonators as one LpcModel, via convolution of the quadratics.
lpcaug::LpcModel resonator_model(const std::vector<double>& freqs_hz, double magnitude,
                                 int sample_rate) {
  std::vector<double> c{1.0};
  for (double f : freqs_hz) {
    const double theta = 2.0 * std::numbers::pi * f / sample_rate;
    const double quad[3] = {1.0, -2.0 * magnitude * std::cos(theta), magnitude * magnitude};
    std::vector<double> next(c.size() + 2, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < 3; ++j) next[i + j] += c[i] * quad[j];
    c = std::move(next);
  }
  std::vector<double> a(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) a[k - 1] = -c[k];
  return {static_cast<int>(a.size()), std::move(a), 1.0};
}

}  // namespace

TEST_CASE("three well-separated resonances give three peaks") {
  // Narrow resonances: at lower pole magnitudes the neighbours' skirts
  // drag the composite envelope maxima tens of hertz off the pole phases.
  const LpcModel model = resonator_model({500.0, 1500.0, 2500.0}, 0.98, 16000);
  const SpectralEnvelope env = lpc_envelope(model, 16000, 512);
  const std::vector<Peak> peaks = pick_formant_peaks(env, 5);
  REQUIRE(peaks.size() == 3);
  const double bin_hz = 8000.0 / 511.0;
  CHECK(std::abs(peaks[0].freq_hz - 500.0) <= bin_hz + 1e-9);
  CHECK(std::abs(peaks[1].freq_hz - 1500.0) <= bin_hz + 1e-9);
  CHECK(std::abs(peaks[2].freq_hz - 2500.0) <= bin_hz + 1e-9);
  for (std::size_t i = 1; i < peaks.size(); ++i) CHECK(peaks[i].freq_hz > peaks[i - 1].freq_hz);

  // Each picked peak sits within a bin of a dense-grid reference peak.
  const std::vector<double> dense = dense_peak_freqs_hz(model.coeffs, 16000);
  for (const Peak& p : peaks) {
    double nearest = 1e18;
    for (double f : dense) nearest = std::min(nearest, std::abs(f - p.freq_hz));
    CHECK(nearest <= bin_hz + 1e-9);
  }
}

TEST_CASE("a flat envelope has no peaks") {
  const LpcModel model{2, {0.0, 0.0}, 1.0};
  CHECK(pick_formant_peaks(lpc_envelope(model, 16000, 512), 5).empty());
}

TEST_CASE("resonances 50 Hz apart merge under the spacing rule") {
  const LpcModel model = resonator_model({1000.0, 1050.0}, 0.97, 16000);
  const SpectralEnvelope env = lpc_envelope(model, 16000, 2048);  // bins ~3.9 Hz apart
  const std::vector<Peak> peaks = pick_formant_peaks(env, 5);
  CHECK(peaks.size() == 1);
}

TEST_CASE("max_peaks truncates to the lowest frequencies") {
  const LpcModel model = resonator_model({500.0, 1500.0, 2500.0, 3500.0}, 0.95, 16000);
  const SpectralEnvelope env = lpc_envelope(model, 16000, 512);
  const std::vector<Peak> peaks = pick_formant_peaks(env, 2);
  REQUIRE(peaks.size() == 2);
  CHECK(peaks[0].freq_hz < 600.0);
  CHECK(peaks[1].freq_hz > 1400.0);
  CHECK(peaks[1].freq_hz < 1600.0);
}

TEST_CASE("envelope CSV has the documented header and one row per bin") {
  TempDir dir;
  const auto path = dir.path() / "env.csv";
  const LpcModel model{1, {0.5}, 1.0};
  write_envelope_csv(lpc_envelope(model, 16000, 32), path);
  const std::string text = slurp(path);
  CHECK(text.rfind("freq_hz,magnitude_db\n", 0) == 0);
  std::size_t rows = 0;
  for (char ch : text)
    if (ch == '\n') ++rows;
  CHECK(rows == 33);  // header + 32 bins
}

TEST_CASE("minimum-phase property holds over 1000 random frames") {
  // Every predictor fitted to a windowed non-degenerate frame must keep all
  // its polynomial roots strictly inside the unit circle.
  const std::vector<double> window = hamming_window(320);
  std::mt19937 gen(99);
  std::uniform_int_distribution<int> order_dist(2, 18);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int order = order_dist(gen);
    std::vector<double> x = white_noise(1200, static_cast<std::uint32_t>(trial + 50000));
    x = naive_allpole(x, random_stable_ar_taps(order, static_cast<std::uint32_t>(trial)));
    std::vector<double> frame(x.begin() + 600, x.begin() + 600 + 320);
    for (std::size_t i = 0; i < frame.size(); ++i) frame[i] *= window[i];
    const LpcModel model = levinson_durbin(autocorrelate(frame, order));
    for (const auto& root : find_roots(model)) worst = std::max(worst, std::abs(root));
  }
  CHECK(worst < 1.0);
}
