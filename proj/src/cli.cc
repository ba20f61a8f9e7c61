// Copyright 2026 The Tailors Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tailors/cli.h"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

#include "tailors/audio_io.h"
#include "tailors/config.h"
#include "tailors/error.h"
#include "tailors/frame_stream.h"
#include "tailors/reports.h"
#include "tailors/stream_server.h"
#include "tailors/survey.h"
#include "tailors/timbral_features.h"
#include "tailors/visual_mapping.h"

namespace tailors {

namespace {

struct AnalyzeArgs {
  std::string vocal;
  std::string background;
  std::string output;
  std::optional<double> fps;
  std::optional<double> alpha;
  std::string track_id;
};

struct ServeArgs {
  std::string frames;
  std::uint16_t port = 8765;
  std::string bind = "0.0.0.0";
  bool wait_for_client = false;
};

struct StatsArgs {
  std::string survey;
  std::string out;
  std::string wilcoxon_unit = "music";
  std::vector<std::string> drop_ivs;
  bool raw_coefficients = false;
};

std::ofstream OpenOutput(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::kSinkWriteFailure, "cannot write " + path);
  return f;
}

void RunAnalyze(const AnalyzeArgs& a, std::ostream& out) {
  PipelineConfig cfg = PipelineConfigFromEnvironment();
  if (a.fps) cfg.mapping.fps = *a.fps;
  if (a.alpha) cfg.mapping.smoothing_alpha = *a.alpha;
  const StemPair stems = LoadStemPair(a.vocal, a.background);
  const TimbralTimeSeries series = ExtractTrackFeatures(stems, cfg.features);
  const std::vector<VisualFrame> frames = MapTrack(series, cfg.mapping);
  StreamHeader header;
  header.fps = cfg.mapping.fps;
  header.duration_s = series.duration_seconds;
  header.track_id =
      a.track_id.empty() ? std::filesystem::path(a.vocal).stem().stem().string() : a.track_id;
  std::ofstream f = OpenOutput(a.output);
  EmitFrames(frames, header, f);
  out << "wrote " << frames.size() << " frames to " << a.output << "\n";
}

void RunFeatures(const AnalyzeArgs& a, std::ostream& out) {
  const PipelineConfig cfg = PipelineConfigFromEnvironment();
  const TimbralTimeSeries series =
      ExtractTrackFeatures(LoadStemPair(a.vocal, a.background), cfg.features);
  std::ofstream f = OpenOutput(a.output);
  WriteFeatureDump(series, f);
  out << "wrote " << series.frames.size() << " feature rows to " << a.output << "\n";
}

void RunServe(const ServeArgs& a, std::ostream& out) {
  std::ifstream in(a.frames, std::ios::binary);
  if (!in) throw Error(ErrorKind::kFileNotFound, "cannot open " + a.frames);
  const FrameStream stream = ParseFrameStream(in);
  FrameServer server(stream.header, stream.frames);
  server.Listen(a.port, a.bind);
  out << "serving " << stream.frames.size() << " frames of '" << stream.header.track_id
      << "' on ws://" << a.bind << ":" << server.port() << "/" << std::endl;
  if (a.wait_for_client) {
    while (!server.WaitForClients(1, std::chrono::seconds(1))) {
    }
  }
  server.Play();
  server.Wait();
}

void RunStats(const StatsArgs& a, std::ostream& out) {
  const std::vector<SurveyRecord> records = LoadSurveyCsv(a.survey);
  ReportOptions options;
  options.standardize = !a.raw_coefficients;
  options.drop_ivs = a.drop_ivs;
  options.wilcoxon_unit = a.wilcoxon_unit == "participant" ? WilcoxonUnit::kParticipantMean
                                                           : WilcoxonUnit::kParticipantMusic;
  const ReportBundle bundle = BuildReports(records, options);
  WriteReports(bundle, a.out);
  out << "wrote " << bundle.families.size() << " report families to " << a.out << "\n";
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Timbre-driven music visualization: analysis, streaming and survey statistics",
               args.empty() ? "tailors" : args[0]};
  app.require_subcommand(1);

  AnalyzeArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Stems to a frame file");
  analyze_cmd->add_option("--vocal", analyze.vocal, "Vocal stem WAV")->required();
  analyze_cmd->add_option("--background", analyze.background, "Background stem WAV")->required();
  analyze_cmd->add_option("--fps", analyze.fps, "Frames per second (default 30)")
      ->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--alpha", analyze.alpha, "Smoothing factor in [0, 1] (default 0.2)")
      ->check(CLI::Range(0.0, 1.0));
  analyze_cmd->add_option("--track-id", analyze.track_id, "Header track_id (default: vocal stem name)");
  analyze_cmd->add_option("-o,--output", analyze.output, "Frame file to write")->required();

  AnalyzeArgs features;
  auto* features_cmd = app.add_subcommand("features", "Raw per-hop feature dump");
  features_cmd->add_option("--vocal", features.vocal, "Vocal stem WAV")->required();
  features_cmd->add_option("--background", features.background, "Background stem WAV")->required();
  features_cmd->add_option("-o,--output", features.output, "Dump file to write")->required();

  ServeArgs serve;
  auto* serve_cmd = app.add_subcommand("serve", "Stream a frame file to WebSocket clients");
  serve_cmd->add_option("--frames", serve.frames, "Frame file")->required();
  serve_cmd->add_option("--port", serve.port, "TCP port (0 picks one)")->required();
  serve_cmd->add_option("--bind", serve.bind, "Listen address");
  serve_cmd->add_flag("--wait-for-client", serve.wait_for_client,
                      "Hold playback until the first client connects");

  StatsArgs stats;
  auto* stats_cmd = app.add_subcommand("stats", "Survey statistics reports");
  stats_cmd->add_option("--survey", stats.survey, "Survey CSV")->required();
  stats_cmd->add_option("--out", stats.out, "Output directory")->required();
  stats_cmd->add_option("--wilcoxon-unit", stats.wilcoxon_unit, "Pairing unit")
      ->check(CLI::IsMember({"music", "participant"}));
  stats_cmd->add_option("--drop-iv", stats.drop_ivs, "Regressor to exclude (repeatable)");
  stats_cmd->add_flag("--raw-coefficients", stats.raw_coefficients,
                      "Fit on raw means instead of z-scores");

  std::vector<const char*> argv;
  const std::string fallback = "tailors";
  if (args.empty()) argv.push_back(fallback.c_str());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (*analyze_cmd) RunAnalyze(analyze, out);
    if (*features_cmd) RunFeatures(features, out);
    if (*serve_cmd) RunServe(serve, out);
    if (*stats_cmd) RunStats(stats, out);
  } catch (const std::exception& e) {
    err << "tailors: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace tailors
