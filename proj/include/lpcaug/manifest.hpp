// include/lpcaug/manifest.hpp

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

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lpcaug {

/// One corpus utterance: JSON-lines object with fields "id", "path",
/// and optional "text" (carried through augmentation untouched).
struct ManifestEntry {
  std::string id;
  std::string path;
  std::optional<std::string> text;
  int line = 0;  // 1-based source line, for error reporting
};

/// Parses a JSONL manifest. Empty lines are skipped. Malformed lines
/// raise Errc::manifest_parse naming the line; duplicate ids raise
/// Errc::manifest_duplicate_id naming both lines.
std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path);

/// Writes entries as JSONL, one object per line, in the given order.
void write_manifest(std::span<const ManifestEntry> entries, const std::filesystem::path& path);

}  // namespace lpcaug
