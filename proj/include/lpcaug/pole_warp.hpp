// include/lpcaug/pole_warp.hpp

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

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "lpcaug/lpc.hpp"

namespace lpcaug {

/// One complex-conjugate pole pair in magnitude/phase form. Only the
/// positive-phase representative is stored; phase lies in (0, pi).
struct PolePair {
  double magnitude = 0.0;
  double phase = 0.0;
};

/// Roots of A(z) split into conjugate pairs (sorted by phase ascending)
/// and real roots (signed values). 2*|pairs| + |reals| equals the
/// polynomial degree.
struct PoleSet {
  std::vector<PolePair> pairs;
  std::vector<double> reals;
};

/// Per-utterance warping factors. factors.size() covers the maximum
/// possible pair count floor(order/2); factor i is applied to the i-th
/// lowest-phase pair of every frame. seed_material records the derived
/// seed the factors were drawn from (0 for forced plans).
struct WarpPlan {
  std::vector<double> factors;
  double range_lo = 0.0;
  double range_hi = 0.0;
  std::uint64_t seed_material = 0;
};

/// One pair's warp, recorded in pre-warp pair order. magnitude is the
/// (unchanged) pole magnitude.
struct WarpAuditEntry {
  int pair_index = 0;
  double magnitude = 0.0;
  double phase_before = 0.0;
  double phase_after = 0.0;
};

/// Roots of A(z), i.e. of z^P - a_1 z^{P-1} - ... - a_P, via companion
/// matrix eigenvalues. Checks |A| at every root against 1e-6 relative
/// to coefficient magnitude and throws Errc::root_failure past it.
std::vector<std::complex<double>> find_roots(const LpcModel& model);

/// Splits roots into real (|imag| < 1e-8) and conjugate pairs (matched
/// within 1e-6, Errc::conjugacy_violation if anything stays unpaired),
/// clamps magnitudes to <= 0.9999, sorts pairs by phase ascending.
PoleSet classify_and_sort(std::span<const std::complex<double>> roots);

/// count independent uniform draws in [range_lo, range_hi] from the
/// deterministic stream documented in rng.hpp. Identical seed_material
/// gives bitwise-identical factors. Throws Errc::invalid_range unless
/// 0 < range_lo <= range_hi.
WarpPlan sample_warp_factors(double range_lo, double range_hi, int count,
                             std::uint64_t seed_material);

/// Multiplies pair i's phase by plan.factors[i] (clamped to
/// [1e-3, pi - 1e-3]), leaving magnitudes and real roots untouched, and
/// re-sorts by phase. Real roots are never warped: their phase is 0 or
/// pi, and rotating it would break conjugate symmetry. Audit entries,
/// when requested, are appended in pre-warp pair order.
PoleSet warp_poles(const PoleSet& poles, const WarpPlan& plan,
                   std::vector<WarpAuditEntry>* audit = nullptr);

/// Expands the monic real polynomial with the given roots — each pair
/// contributes z^2 - 2*m*cos(phase)*z + m^2, each real root z - r — and
/// returns it as a_k coefficients (A(z) = 1 - sum a_k z^-k). Real
/// arithmetic throughout, so conjugate symmetry is exact.
std::vector<double> poly_from_roots(const PoleSet& poles);

}  // namespace lpcaug
