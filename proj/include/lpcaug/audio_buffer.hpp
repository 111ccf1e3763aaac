// include/lpcaug/audio_buffer.hpp

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

#include <vector>

namespace lpcaug {

/// Mono audio, full-scale samples in [-1, 1]. The unit of corpus I/O.
struct AudioBuffer {
  std::vector<double> samples;
  int sample_rate = 0;  // Hz, > 0 for a valid buffer
};

}  // namespace lpcaug
