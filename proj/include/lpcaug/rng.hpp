// include/lpcaug/rng.hpp

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
#include <random>
#include <string_view>

namespace lpcaug {

// Reproducibility contract, independent of platform and scheduling:
//
//   seed_material = fnv1a64(LE64(global_seed) || utterance_id bytes
//                           || LE64(copy_index))
//   stream        = std::mt19937_64 seeded with seed_material
//   uniform [0,1) = (next_u64() >> 11) * 2^-53
//
// mt19937_64 state initialization from a single 64-bit value and its
// output sequence are fully specified by the C++ standard, and the
// [0,1) mapping above avoids std::uniform_real_distribution, whose
// algorithm is implementation-defined. Identical inputs therefore give
// bitwise-identical draws everywhere.

/// FNV-1a 64-bit over the canonical byte string described above.
std::uint64_t derive_seed(std::uint64_t global_seed, std::string_view utterance_id,
                          std::uint64_t copy_index);

/// Top 53 bits of one mt19937_64 output mapped to [0, 1).
inline double uniform_unit(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

}  // namespace lpcaug
