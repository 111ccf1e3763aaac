// include/lpcaug/cli.hpp

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

#ifndef LPCAUG_CLI_HPP_
#define LPCAUG_CLI_HPP_

namespace lpcaug {

/// Entry point for the `lpcaug` command-line tool.
///
/// Subcommands:
///   augment  — expand a JSONL corpus manifest into seeded augmented copies
///   analyze  — spectral-envelope and formant-shift report for one file
///   single   — augment one WAV into one output WAV
///
/// Returns 0 on success, 1 on a usage error (bad flags or flag values),
/// and 2 on a runtime failure (I/O errors, per-utterance failures in a
/// batch run). `LPCAUG_OUT_DIR` supplies a default output directory when
/// `--out-dir` is not given; explicit flags always win.
int run_cli(int argc, const char* const* argv);

}  // namespace lpcaug

#endif  // LPCAUG_CLI_HPP_
