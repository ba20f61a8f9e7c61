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

#include "tailors/frame_stream.h"

#include <fmt/format.h>

#include <cmath>
#include <istream>
#include <ostream>

#include "json.hpp"
#include "tailors/error.h"

namespace tailors {

namespace {

using nlohmann::json;

[[noreturn]] void Schema(const std::string& what) {
  throw Error(ErrorKind::kSchemaMismatch, what);
}

const json& Field(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) Schema(std::string("missing field '") + key + "'");
  return *it;
}

double NumberField(const json& obj, const char* key, double lo, double hi) {
  const json& v = Field(obj, key);
  if (!v.is_number()) Schema(std::string("field '") + key + "' is not a number");
  const double x = v.get<double>();
  if (!(x >= lo && x <= hi)) {
    Schema(fmt::format("field '{}' = {} outside [{}, {}]", key, x, lo, hi));
  }
  return x;
}

void ExpectKeys(const json& obj, std::size_t n, const char* what) {
  if (!obj.is_object()) Schema(std::string(what) + " is not an object");
  if (obj.size() != n) Schema(fmt::format("{} has {} fields, expected {}", what, obj.size(), n));
}

json ParseJson(std::string_view line) {
  try {
    return json::parse(line);
  } catch (const json::parse_error& e) {
    Schema(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

std::string FormatNumber(double value) {
  std::string s = fmt::format("{:.6f}", value);
  const auto dot = s.find('.');
  if (dot != std::string::npos) {
    const auto last = s.find_last_not_of('0');
    s.erase(last == dot ? dot : last + 1);
  }
  if (s == "-0") s = "0";
  return s;
}

std::string HeaderLine(const StreamHeader& header) {
  return fmt::format(R"({{"schema_version":{},"fps":{},"duration_s":{},"track_id":{}}})",
                     header.schema_version, FormatNumber(header.fps),
                     FormatNumber(header.duration_s), json(header.track_id).dump());
}

std::string FrameLine(const VisualFrame& f) {
  return fmt::format(
      R"({{"t":{},"object":{{"dispersion":{},"metalness":{},"hue_deg":{}}},)"
      R"("background":{{"kind":"{}","surface_roughness":{},"hue_deg":{},"value":{},"saturation":{}}}}})",
      FormatNumber(f.t), FormatNumber(f.object.dispersion), FormatNumber(f.object.metalness),
      FormatNumber(f.object.hue_deg), BackgroundKindName(f.background.kind),
      FormatNumber(f.background.surface_roughness), FormatNumber(f.background.hue_deg),
      FormatNumber(f.background.value), FormatNumber(f.background.saturation));
}

void EmitFrames(std::span<const VisualFrame> frames, const StreamHeader& header,
                std::ostream& sink) {
  sink << HeaderLine(header) << '\n';
  for (const VisualFrame& f : frames) {
    sink << FrameLine(f) << '\n';
    if (!sink) break;
  }
  sink.flush();
  if (!sink) throw Error(ErrorKind::kSinkWriteFailure, "frame sink rejected write");
}

StreamHeader ParseHeaderLine(std::string_view line) {
  const json j = ParseJson(line);
  ExpectKeys(j, 4, "header");
  const json& version = Field(j, "schema_version");
  if (!version.is_number_integer() || version.get<int>() != kSchemaVersion) {
    Schema("unsupported schema_version " + version.dump());
  }
  StreamHeader h;
  h.fps = NumberField(j, "fps", 0.0, HUGE_VAL);
  if (!(h.fps > 0.0)) Schema("fps must be positive");
  h.duration_s = NumberField(j, "duration_s", 0.0, HUGE_VAL);
  const json& id = Field(j, "track_id");
  if (!id.is_string()) Schema("track_id is not a string");
  h.track_id = id.get<std::string>();
  return h;
}

VisualFrame ParseFrameLine(std::string_view line) {
  const json j = ParseJson(line);
  ExpectKeys(j, 3, "frame");
  VisualFrame f;
  f.t = NumberField(j, "t", 0.0, HUGE_VAL);
  const json& obj = Field(j, "object");
  ExpectKeys(obj, 3, "object");
  f.object.dispersion = NumberField(obj, "dispersion", 0.0, 1.0);
  f.object.metalness = NumberField(obj, "metalness", 0.0, 1.0);
  f.object.hue_deg = NumberField(obj, "hue_deg", 0.0, 360.0);
  const json& bg = Field(j, "background");
  ExpectKeys(bg, 5, "background");
  const json& kind = Field(bg, "kind");
  const auto parsed = kind.is_string() ? ParseBackgroundKind(kind.get<std::string>())
                                       : std::nullopt;
  if (!parsed) Schema("unknown background kind " + kind.dump());
  f.background.kind = *parsed;
  f.background.surface_roughness = NumberField(bg, "surface_roughness", 0.0, 1.0);
  f.background.hue_deg = NumberField(bg, "hue_deg", 0.0, 360.0);
  f.background.value = NumberField(bg, "value", 0.0, 1.0);
  f.background.saturation = NumberField(bg, "saturation", 0.0, 1.0);
  if (f.object.hue_deg >= 360.0 || f.background.hue_deg >= 360.0) Schema("hue must be < 360");
  return f;
}

FrameStream ParseFrameStream(std::istream& in) {
  FrameStream out;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    try {
      if (!have_header) {
        out.header = ParseHeaderLine(line);
        have_header = true;
        continue;
      }
      VisualFrame f = ParseFrameLine(line);
      if (!out.frames.empty() && !(f.t > out.frames.back().t)) Schema("t is not increasing");
      out.frames.push_back(f);
    } catch (const Error& e) {
      throw Error(e.kind(), fmt::format("line {}: {}", line_no, e.detail()));
    }
  }
  if (!have_header) Schema("empty stream, header line missing");
  return out;
}

void WriteFeatureDump(const TimbralTimeSeries& series, std::ostream& sink) {
  for (std::size_t k = 0; k < series.frames.size(); ++k) {
    const TimbralFrame& f = series.frames[k];
    sink << fmt::format(R"({{"t":{})", FormatNumber(k * series.hop_seconds));
    for (std::size_t c = 0; c < kNumChannels; ++c) {
      sink << fmt::format(R"(,"{}":{})", kChannelNames[c], f.*kChannels[c]);
    }
    sink << "}\n";
  }
  sink.flush();
  if (!sink) throw Error(ErrorKind::kSinkWriteFailure, "feature sink rejected write");
}

}  // namespace tailors
