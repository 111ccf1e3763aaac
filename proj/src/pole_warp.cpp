// src/pole_warp.cpp

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

#include "lpcaug/pole_warp.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "lpcaug/error.hpp"
#include "lpcaug/rng.hpp"

namespace lpcaug {

namespace {

constexpr double kRealImagTol = 1e-8;   // |imag| below this is a real root
constexpr double kPairMatchTol = 1e-6;  // conjugate matching distance
constexpr double kMagnitudeClamp = 0.9999;
constexpr double kRootResidualTol = 1e-6;
constexpr double kPhaseFloor = 1e-3;

void sort_pairs_by_phase(std::vector<PolePair>& pairs) {
  std::sort(pairs.begin(), pairs.end(), [](const PolePair& a, const PolePair& b) {
    if (a.phase != b.phase) return a.phase < b.phase;
    return a.magnitude < b.magnitude;
  });
}

}  // namespace

std::vector<std::complex<double>> find_roots(const LpcModel& model) {
  const int p = model.order;
  if (p < 1 || static_cast<int>(model.coeffs.size()) != p)
    throw Error(Errc::invalid_config, "model order/coefficient mismatch");

  // Monic form z^P + c_1 z^{P-1} + ... + c_P with c_k = -a_k.
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(p, p);
  for (int i = 0; i + 1 < p; ++i) companion(i + 1, i) = 1.0;
  for (int i = 0; i < p; ++i) companion(i, p - 1) = model.coeffs[p - 1 - i];

  const Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw Error(Errc::root_failure, "companion eigenvalue iteration failed");

  std::vector<std::complex<double>> roots(p);
  for (int i = 0; i < p; ++i) roots[i] = solver.eigenvalues()(i);

  double coeff_scale = 1.0;
  for (double a : model.coeffs) coeff_scale = std::max(coeff_scale, std::abs(a));
  for (const auto& z : roots) {
    // Horner on z^P - a_1 z^{P-1} - ... - a_P
    std::complex<double> acc(1.0, 0.0);
    for (int k = 0; k < p; ++k) acc = acc * z - model.coeffs[k];
    if (!(std::abs(acc) < kRootResidualTol * coeff_scale))
      throw Error(Errc::root_failure, "root residual above tolerance");
  }
  return roots;
}

PoleSet classify_and_sort(std::span<const std::complex<double>> roots) {
  PoleSet set;
  std::vector<std::complex<double>> pos, neg;
  for (const auto& z : roots) {
    if (std::abs(z.imag()) < kRealImagTol) {
      set.reals.push_back(std::clamp(z.real(), -kMagnitudeClamp, kMagnitudeClamp));
    } else if (z.imag() > 0.0) {
      pos.push_back(z);
    } else {
      neg.push_back(z);
    }
  }
  if (pos.size() != neg.size())
    throw Error(Errc::conjugacy_violation, "complex roots do not pair up");

  auto lex = [](const std::complex<double>& a, const std::complex<double>& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  };
  std::sort(pos.begin(), pos.end(), lex);
  std::sort(neg.begin(), neg.end(), lex);

  std::vector<bool> used(neg.size(), false);
  for (const auto& z : pos) {
    int best = -1;
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < neg.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(std::conj(z) - neg[j]);
      if (d < best_dist) {
        best_dist = d;
        best = static_cast<int>(j);
      }
    }
    if (best < 0 || !(best_dist <= kPairMatchTol * std::max(1.0, std::abs(z))))
      throw Error(Errc::conjugacy_violation, "no conjugate within tolerance");
    used[best] = true;
    set.pairs.push_back({std::min(std::abs(z), kMagnitudeClamp), std::arg(z)});
  }

  sort_pairs_by_phase(set.pairs);
  std::sort(set.reals.begin(), set.reals.end());
  return set;
}

WarpPlan sample_warp_factors(double range_lo, double range_hi, int count,
                             std::uint64_t seed_material) {
  if (!(range_lo > 0.0) || !(range_lo <= range_hi))
    throw Error(Errc::invalid_range, "warp range must satisfy 0 < lo <= hi");
  if (count < 0) throw Error(Errc::invalid_range, "factor count must be >= 0");

  WarpPlan plan;
  plan.range_lo = range_lo;
  plan.range_hi = range_hi;
  plan.seed_material = seed_material;
  plan.factors.reserve(count);
  std::mt19937_64 gen(seed_material);
  for (int i = 0; i < count; ++i)
    plan.factors.push_back(range_lo + uniform_unit(gen) * (range_hi - range_lo));
  return plan;
}

PoleSet warp_poles(const PoleSet& poles, const WarpPlan& plan,
                   std::vector<WarpAuditEntry>* audit) {
  if (plan.factors.size() < poles.pairs.size())
    throw Error(Errc::invalid_range, "warp plan has fewer factors than pole pairs");

  const double phase_ceil = std::numbers::pi - 1e-3;
  PoleSet out;
  out.reals = poles.reals;
  out.pairs.reserve(poles.pairs.size());
  for (std::size_t i = 0; i < poles.pairs.size(); ++i) {
    const PolePair& p = poles.pairs[i];
    const double warped = std::clamp(plan.factors[i] * p.phase, kPhaseFloor, phase_ceil);
    if (audit) audit->push_back({static_cast<int>(i), p.magnitude, p.phase, warped});
    out.pairs.push_back({p.magnitude, warped});
  }
  sort_pairs_by_phase(out.pairs);
  return out;
}

std::vector<double> poly_from_roots(const PoleSet& poles) {
  std::vector<double> c{1.0};  // monic, z-descending
  auto multiply = [&c](std::span<const double> factor) {
    std::vector<double> out(c.size() + factor.size() - 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < factor.size(); ++j) out[i + j] += c[i] * factor[j];
    c = std::move(out);
  };
  for (const PolePair& p : poles.pairs) {
    const double quad[3] = {1.0, -2.0 * p.magnitude * std::cos(p.phase),
                            p.magnitude * p.magnitude};
    multiply(quad);
  }
  for (double r : poles.reals) {
    const double lin[2] = {1.0, -r};
    multiply(lin);
  }
  std::vector<double> a(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) a[k - 1] = -c[k];
  return a;
}

}  // namespace lpcaug
