// include/lpcaug/error.hpp

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

#include <stdexcept>
#include <string>

namespace lpcaug {

enum class Errc {
  file_missing,
  unsupported_encoding,
  empty_audio,
  io_failure,
  buffer_too_short,
  grid_mismatch,
  degenerate_frame,
  numerical_degeneracy,
  root_failure,
  conjugacy_violation,
  invalid_range,
  invalid_config,
  manifest_parse,
  manifest_duplicate_id,
  no_voiced_frame,
};

/// Single exception type for the whole library; the code distinguishes
/// error classes that callers dispatch on (e.g. per-frame degeneracies
/// become passthrough, I/O errors become batch failures).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Degeneracies are per-frame numerical failures that the augmentation
/// pipeline converts into flagged passthrough rather than aborting.
inline bool is_frame_degeneracy(Errc code) noexcept {
  switch (code) {
    case Errc::degenerate_frame:
    case Errc::numerical_degeneracy:
    case Errc::root_failure:
    case Errc::conjugacy_violation:
      return true;
    default:
      return false;
  }
}

}  // namespace lpcaug
