// include/lpcaug/batch.hpp

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
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "lpcaug/manifest.hpp"
#include "lpcaug/pipeline.hpp"

namespace lpcaug {

struct BatchOptions {
  int copies = 2;  // originals + 2 copies = 3x corpus
  std::uint64_t global_seed = 0;
  int workers = 0;  // 0 = hardware concurrency
  bool dump_poles = false;
};

struct BatchFailure {
  std::string utterance_id;
  std::string reason;
};

struct BatchReport {
  int processed = 0;  // = successes + failures.size()
  int successes = 0;
  long long passthrough_frames = 0;
  int clipped_utterances = 0;
  std::vector<BatchFailure> failures;  // sorted by utterance id
  AugmentConfig config;                // resolved configuration echo
  int copies = 0;
  std::uint64_t global_seed = 0;
  int workers = 0;
  double elapsed_seconds = 0.0;
  std::filesystem::path output_manifest;
};

/// Expands a corpus: for every manifest entry, writes `copies`
/// augmented WAVs named {id}_lpcaug{n}.wav (n = 1..copies) into
/// out_dir, each drawn from seed (global_seed, id, n), then writes an
/// output manifest (out_dir/manifest.jsonl) covering originals and
/// copies in input order. Entries are distributed over a worker pool;
/// outputs are byte-identical for any worker count because every copy's
/// randomness comes from its identity, not from scheduling. Per-entry
/// failures are recorded and the run continues; only an unusable
/// out_dir aborts.
BatchReport batch_augment(std::span<const ManifestEntry> manifest, const AugmentConfig& cfg,
                          const BatchOptions& options, const std::filesystem::path& out_dir);

/// Serializes a report as JSON to the given path.
void write_report_json(const BatchReport& report, const std::filesystem::path& path);

/// Writes per-frame warp audit rows as CSV with header
/// frame_index,pair_index,magnitude,phase_before,phase_after.
void write_pole_dump_csv(std::span<const FrameAudit> audit, const std::filesystem::path& path);

}  // namespace lpcaug
