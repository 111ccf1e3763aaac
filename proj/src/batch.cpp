// src/batch.cpp

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

#include "lpcaug/batch.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <thread>

#include "json.hpp"
#include "lpcaug/error.hpp"
#include "lpcaug/wav_io.hpp"

namespace lpcaug {

namespace {

struct EntryOutcome {
  bool ok = false;
  std::string reason;
  long long passthrough_frames = 0;
  int clipped = 0;
  std::vector<ManifestEntry> copy_rows;
};

std::string copy_id(const std::string& id, int n) {
  return id + "_lpcaug" + std::to_string(n);
}

void process_entry(const ManifestEntry& entry, const AugmentConfig& cfg,
                   const BatchOptions& options, const std::filesystem::path& out_dir,
                   EntryOutcome& outcome) {
  try {
    const AudioBuffer input = load_wav(entry.path);
    for (int n = 1; n <= options.copies; ++n) {
      const UtteranceSeed seed{options.global_seed, entry.id,
                               static_cast<std::uint64_t>(n)};
      const UtteranceResult result =
          augment_utterance(input, cfg, seed, options.dump_poles);
      const std::string name = copy_id(entry.id, n);
      const std::filesystem::path wav_path = out_dir / (name + ".wav");
      save_wav(result.audio, wav_path);
      if (options.dump_poles)
        write_pole_dump_csv(result.audit, out_dir / (name + ".poles.csv"));
      outcome.passthrough_frames += result.passthrough_frames;
      if (result.clipped) outcome.clipped = 1;
      outcome.copy_rows.push_back({name, wav_path.string(), entry.text, 0});
    }
    outcome.ok = true;
  } catch (const Error& e) {
    outcome.reason = e.what();
  } catch (const std::exception& e) {
    outcome.reason = e.what();
  }
}

}  // namespace

BatchReport batch_augment(std::span<const ManifestEntry> manifest, const AugmentConfig& cfg,
                          const BatchOptions& options, const std::filesystem::path& out_dir) {
  validate_config(cfg);
  if (options.copies < 0) throw Error(Errc::invalid_config, "copies must be >= 0");

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec || !std::filesystem::is_directory(out_dir))
    throw Error(Errc::io_failure, "cannot create output directory " + out_dir.string());

  const auto t0 = std::chrono::steady_clock::now();

  int workers = options.workers;
  if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, 64);
  workers = std::min(workers, static_cast<int>(std::max<std::size_t>(manifest.size(), 1)));

  std::vector<EntryOutcome> outcomes(manifest.size());
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= manifest.size()) return;
      process_entry(manifest[i], cfg, options, out_dir, outcomes[i]);
    }
  };
  if (workers == 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(run);
    for (std::thread& t : pool) t.join();
  }

  BatchReport report;
  report.processed = static_cast<int>(manifest.size());
  report.config = cfg;
  report.copies = options.copies;
  report.global_seed = options.global_seed;
  report.workers = workers;

  std::vector<ManifestEntry> out_manifest;
  out_manifest.reserve(manifest.size() * (1 + options.copies));
  for (std::size_t i = 0; i < manifest.size(); ++i) {
    const EntryOutcome& outcome = outcomes[i];
    if (!outcome.ok) {
      report.failures.push_back({manifest[i].id, outcome.reason});
      continue;
    }
    ++report.successes;
    report.passthrough_frames += outcome.passthrough_frames;
    report.clipped_utterances += outcome.clipped;
    out_manifest.push_back(manifest[i]);
    out_manifest.insert(out_manifest.end(), outcome.copy_rows.begin(), outcome.copy_rows.end());
  }
  std::sort(report.failures.begin(), report.failures.end(),
            [](const BatchFailure& a, const BatchFailure& b) {
              return a.utterance_id < b.utterance_id;
            });

  report.output_manifest = out_dir / "manifest.jsonl";
  write_manifest(out_manifest, report.output_manifest);

  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

void write_report_json(const BatchReport& report, const std::filesystem::path& path) {
  nlohmann::json j;
  j["processed"] = report.processed;
  j["successes"] = report.successes;
  j["passthrough_frames"] = report.passthrough_frames;
  j["clipped_utterances"] = report.clipped_utterances;
  nlohmann::json failures = nlohmann::json::array();
  for (const BatchFailure& f : report.failures)
    failures.push_back({{"id", f.utterance_id}, {"reason", f.reason}});
  j["failures"] = std::move(failures);
  j["config"] = {{"warp_lo", report.config.warp_lo},
                 {"warp_hi", report.config.warp_hi},
                 {"window_ms", report.config.window_ms},
                 {"hop_ms", report.config.hop_ms},
                 {"silence_rms_threshold", report.config.silence_rms_threshold},
                 {"peak_limit", report.config.peak_limit},
                 {"energy_match", report.config.energy_match}};
  j["copies"] = report.copies;
  j["global_seed"] = report.global_seed;
  j["workers"] = report.workers;
  j["elapsed_seconds"] = report.elapsed_seconds;
  j["output_manifest"] = report.output_manifest.string();

  std::ofstream os(path, std::ios::trunc);
  if (!os) throw Error(Errc::io_failure, "cannot write report " + path.string());
  os << j.dump(2) << '\n';
  if (!os) throw Error(Errc::io_failure, "write failed for report " + path.string());
}

void write_pole_dump_csv(std::span<const FrameAudit> audit, const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::trunc);
  if (!os) throw Error(Errc::io_failure, "cannot write pole dump " + path.string());
  os << "frame_index,pair_index,magnitude,phase_before,phase_after\n";
  os.precision(17);
  for (const FrameAudit& frame : audit)
    for (const WarpAuditEntry& e : frame.pairs)
      os << frame.frame_index << ',' << e.pair_index << ',' << e.magnitude << ','
         << e.phase_before << ',' << e.phase_after << '\n';
  if (!os) throw Error(Errc::io_failure, "write failed for pole dump " + path.string());
}

}  // namespace lpcaug
