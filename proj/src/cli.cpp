// src/cli.cpp

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

#include "lpcaug/cli.hpp"

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lpcaug/analyze.hpp"
#include "lpcaug/batch.hpp"
#include "lpcaug/error.hpp"
#include "lpcaug/manifest.hpp"
#include "lpcaug/pipeline.hpp"
#include "lpcaug/wav_io.hpp"

namespace lpcaug {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;

constexpr const char* kOutDirEnv = "LPCAUG_OUT_DIR";

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << "\nRun with --help for usage.\n";
  return kExitUsage;
}

/// Flag-value validation shared by all subcommands. Bad values are usage
/// errors (exit 1), unlike failures that happen once real work starts.
std::optional<std::string> check_config(const AugmentConfig& cfg) {
  if (!(cfg.warp_lo > 0.0)) return "--warp-lo must be positive";
  if (cfg.warp_lo > cfg.warp_hi) return "--warp-lo must not exceed --warp-hi";
  if (!(cfg.window_ms > 0.0) || !(cfg.hop_ms > 0.0))
    return "--window-ms and --hop-ms must be positive";
  if (cfg.hop_ms > cfg.window_ms) return "--hop-ms must not exceed --window-ms";
  return std::nullopt;
}

/// Adds the warp/framing flags every subcommand understands.
void add_config_flags(CLI::App* cmd, AugmentConfig* cfg, std::uint64_t* seed) {
  cmd->add_option("--seed", *seed, "Global seed for per-utterance factor draws")
      ->default_val(std::uint64_t{0});
  cmd->add_option("--warp-lo", cfg->warp_lo, "Lower bound of the warping-factor range")
      ->default_val(0.8);
  cmd->add_option("--warp-hi", cfg->warp_hi, "Upper bound of the warping-factor range")
      ->default_val(1.2);
  cmd->add_option("--window-ms", cfg->window_ms, "Analysis window length in milliseconds")
      ->default_val(20.0);
  cmd->add_option("--hop-ms", cfg->hop_ms, "Hop between analysis windows in milliseconds")
      ->default_val(10.0);
}

int run_augment(const std::filesystem::path& manifest_path, const std::filesystem::path& out_dir,
                const AugmentConfig& cfg, const BatchOptions& options,
                const std::filesystem::path& report_path) {
  const std::vector<ManifestEntry> manifest = read_manifest(manifest_path);
  const BatchReport report = batch_augment(manifest, cfg, options, out_dir);
  if (!report_path.empty()) write_report_json(report, report_path);

  std::cout << "processed " << report.processed << " utterance(s): " << report.successes
            << " ok, " << report.failures.size() << " failed; wrote "
            << report.successes * options.copies << " augmented file(s) and "
            << report.output_manifest.string() << " in " << report.elapsed_seconds << " s\n";
  if (report.passthrough_frames > 0)
    std::cout << "note: " << report.passthrough_frames
              << " frame(s) passed through unmodified (silence or degenerate analysis)\n";
  for (const BatchFailure& f : report.failures)
    std::cerr << "failed " << f.utterance_id << ": " << f.reason << '\n';
  return report.failures.empty() ? kExitOk : kExitRuntime;
}

int run_analyze(const std::filesystem::path& input, const std::filesystem::path& out_dir,
                const AugmentConfig& cfg, const AnalyzeOptions& options, std::string id) {
  if (id.empty()) id = input.stem().string();
  const AudioBuffer buffer = load_wav(input);
  const AnalyzeResult result = analyze_buffer(buffer, cfg, options, id);

  std::filesystem::create_directories(out_dir);
  const std::filesystem::path before_csv = out_dir / (id + "_envelope_before.csv");
  const std::filesystem::path after_csv = out_dir / (id + "_envelope_after.csv");
  const std::filesystem::path peaks_csv = out_dir / (id + "_peaks.csv");
  write_envelope_csv(result.before, before_csv);
  write_envelope_csv(result.after, after_csv);
  write_peak_table_csv(result.shifts, peaks_csv);

  std::cout << "analyzed frame " << result.frame_index << " with factors";
  for (double w : result.plan.factors) std::cout << ' ' << w;
  std::cout << '\n';
  for (const PeakShift& s : result.shifts)
    std::cout << "peak " << s.peak_index << ": " << s.freq_before_hz << " Hz -> "
              << s.freq_after_hz << " Hz (shift " << s.shift_hz << " Hz)\n";
  std::cout << "wrote " << before_csv.string() << ", " << after_csv.string() << ", "
            << peaks_csv.string() << '\n';
  return kExitOk;
}

int run_single(const std::filesystem::path& input, const std::filesystem::path& output,
               const AugmentConfig& cfg, std::uint64_t seed, std::uint64_t copy_index,
               bool dump_poles) {
  const AudioBuffer buffer = load_wav(input);
  const UtteranceSeed utterance_seed{seed, input.stem().string(), copy_index};
  const UtteranceResult result = augment_utterance(buffer, cfg, utterance_seed, dump_poles);
  if (!output.parent_path().empty()) std::filesystem::create_directories(output.parent_path());
  save_wav(result.audio, output);
  if (dump_poles) {
    std::filesystem::path poles_path = output;
    poles_path.replace_extension("poles.csv");
    write_pole_dump_csv(result.audit, poles_path);
    std::cout << "wrote " << poles_path.string() << '\n';
  }

  std::cout << "wrote " << output.string() << " (" << result.frames_total << " frame(s), "
            << result.passthrough_frames << " passthrough)";
  if (result.clipped) std::cout << " [peak-limited]";
  if (result.too_short) std::cout << " [shorter than one window, copied unmodified]";
  std::cout << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"lpcaug — speech data augmentation by pole-phase warping of LPC filters"};
  app.require_subcommand(1);

  // --- augment -------------------------------------------------------------
  AugmentConfig aug_cfg;
  BatchOptions batch_options;
  std::filesystem::path manifest_path;
  std::filesystem::path aug_out_dir;
  std::filesystem::path report_path;

  CLI::App* augment = app.add_subcommand(
      "augment", "Expand a JSONL manifest into seeded augmented copies of each utterance");
  augment->add_option("--manifest", manifest_path, "Input manifest (JSONL: id, path, text)")
      ->required();
  augment->add_option("--out-dir", aug_out_dir, "Directory for augmented WAVs and manifest")
      ->envname(kOutDirEnv)
      ->required();
  augment->add_option("--copies", batch_options.copies, "Augmented copies per utterance")
      ->default_val(2);
  add_config_flags(augment, &aug_cfg, &batch_options.global_seed);
  augment->add_flag("--energy-match", aug_cfg.energy_match,
                    "Rescale each perturbed frame to the source frame energy");
  augment->add_flag("--dump-poles", batch_options.dump_poles,
                    "Write a per-copy CSV of pole magnitudes and phases");
  augment->add_option("--report", report_path, "Write a JSON batch report to this path");
  augment->add_option("--workers", batch_options.workers,
                      "Worker threads (0 = hardware concurrency)")
      ->default_val(0);

  // --- analyze -------------------------------------------------------------
  AugmentConfig ana_cfg;
  AnalyzeOptions ana_options;
  std::vector<double> forced_factors;
  std::filesystem::path ana_input;
  std::filesystem::path ana_out_dir = ".";
  std::string ana_id;

  CLI::App* analyze = app.add_subcommand(
      "analyze", "Write pre/post-warp envelope CSVs and a formant peak-shift table");
  analyze->add_option("input", ana_input, "Input WAV file")->required();
  analyze->add_option("--out-dir", ana_out_dir, "Directory for the CSV outputs")
      ->envname(kOutDirEnv);
  analyze
      ->add_option("--factors", forced_factors,
                   "Comma-separated factors applied in place of the seeded draw "
                   "(cycled when shorter than the pole-pair count)")
      ->delimiter(',');
  add_config_flags(analyze, &ana_cfg, &ana_options.global_seed);
  analyze->add_option("--bins", ana_options.n_bins, "Envelope resolution in frequency bins")
      ->default_val(512);
  analyze->add_option("--max-peaks", ana_options.max_peaks, "Largest number of peaks to report")
      ->default_val(5);
  analyze->add_option("--id", ana_id, "Utterance id for seeding (default: input stem)");

  // --- single --------------------------------------------------------------
  AugmentConfig single_cfg;
  std::filesystem::path single_input;
  std::filesystem::path single_output;
  std::uint64_t single_seed = 0;
  std::uint64_t single_copy = 1;
  bool single_dump_poles = false;

  CLI::App* single = app.add_subcommand("single", "Augment one WAV file into one output WAV");
  single->add_option("input", single_input, "Input WAV file")->required();
  single->add_option("output", single_output, "Output WAV file")->required();
  single->add_option("--copy-index", single_copy, "Copy index mixed into the seed")
      ->default_val(std::uint64_t{1});
  add_config_flags(single, &single_cfg, &single_seed);
  single->add_flag("--energy-match", single_cfg.energy_match,
                   "Rescale each perturbed frame to the source frame energy");
  single->add_flag("--dump-poles", single_dump_poles,
                   "Write a CSV of pole magnitudes and phases next to the output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (augment->parsed()) {
      if (auto msg = check_config(aug_cfg)) return usage_error(*msg);
      if (batch_options.copies < 0) return usage_error("--copies must be non-negative");
      if (batch_options.workers < 0) return usage_error("--workers must be non-negative");
      return run_augment(manifest_path, aug_out_dir, aug_cfg, batch_options, report_path);
    }
    if (analyze->parsed()) {
      if (auto msg = check_config(ana_cfg)) return usage_error(*msg);
      if (ana_options.n_bins < 16) return usage_error("--bins must be at least 16");
      if (ana_options.max_peaks < 1) return usage_error("--max-peaks must be at least 1");
      if (!forced_factors.empty()) {
        for (double w : forced_factors)
          if (!(w > 0.0)) return usage_error("--factors entries must be positive");
        ana_options.forced_factors = forced_factors;
      }
      return run_analyze(ana_input, ana_out_dir, ana_cfg, ana_options, ana_id);
    }
    if (single->parsed()) {
      if (auto msg = check_config(single_cfg)) return usage_error(*msg);
      return run_single(single_input, single_output, single_cfg, single_seed, single_copy,
                        single_dump_poles);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitUsage;  // unreachable while a subcommand is required
}

}  // namespace lpcaug
