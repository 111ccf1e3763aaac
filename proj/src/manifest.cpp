// src/manifest.cpp

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

#include "lpcaug/manifest.hpp"

#include <fstream>
#include <unordered_map>

#include "json.hpp"
#include "lpcaug/error.hpp"

namespace lpcaug {

std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::file_missing, "cannot open manifest " + path.string());

  std::vector<ManifestEntry> entries;
  std::unordered_map<std::string, int> seen;  // id -> line
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;

    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(Errc::manifest_parse, path.string() + " line " + std::to_string(line_no) +
                                            ": invalid JSON (" + e.what() + ")");
    }
    if (!obj.is_object() || !obj.contains("id") || !obj["id"].is_string())
      throw Error(Errc::manifest_parse, path.string() + " line " + std::to_string(line_no) +
                                            ": missing string field \"id\"");
    if (!obj.contains("path") || !obj["path"].is_string())
      throw Error(Errc::manifest_parse, path.string() + " line " + std::to_string(line_no) +
                                            ": missing string field \"path\"");

    ManifestEntry entry;
    entry.id = obj["id"].get<std::string>();
    entry.path = obj["path"].get<std::string>();
    if (obj.contains("text")) {
      if (!obj["text"].is_string())
        throw Error(Errc::manifest_parse, path.string() + " line " + std::to_string(line_no) +
                                              ": field \"text\" must be a string");
      entry.text = obj["text"].get<std::string>();
    }
    entry.line = line_no;

    const auto [it, inserted] = seen.emplace(entry.id, line_no);
    if (!inserted)
      throw Error(Errc::manifest_duplicate_id,
                  path.string() + ": duplicate id \"" + entry.id + "\" on lines " +
                      std::to_string(it->second) + " and " + std::to_string(line_no));
    entries.push_back(std::move(entry));
  }
  return entries;
}

void write_manifest(std::span<const ManifestEntry> entries, const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::trunc);
  if (!os) throw Error(Errc::io_failure, "cannot write manifest " + path.string());
  for (const ManifestEntry& e : entries) {
    nlohmann::json obj;
    obj["id"] = e.id;
    obj["path"] = e.path;
    if (e.text) obj["text"] = *e.text;
    os << obj.dump() << '\n';
  }
  if (!os) throw Error(Errc::io_failure, "write failed for manifest " + path.string());
}

}  // namespace lpcaug
