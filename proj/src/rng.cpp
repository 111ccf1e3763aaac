// src/rng.cpp

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

#include "lpcaug/rng.hpp"

namespace lpcaug {

namespace {

constexpr std::uint64_t kFnvOffset = 14695981039346656037ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

void mix_u64_le(std::uint64_t& h, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (8 * i)) & 0xffu;
    h *= kFnvPrime;
  }
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t global_seed, std::string_view utterance_id,
                          std::uint64_t copy_index) {
  std::uint64_t h = kFnvOffset;
  mix_u64_le(h, global_seed);
  for (unsigned char c : utterance_id) {
    h ^= c;
    h *= kFnvPrime;
  }
  mix_u64_le(h, copy_index);
  return h;
}

}  // namespace lpcaug
