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

#include "tailors/config.h"

#include <cstdlib>
#include <fstream>
#include <string>

#include "json.hpp"
#include "tailors/error.h"

namespace tailors {

namespace {

using nlohmann::json;

double Number(const json& j, const char* key) {
  if (!j.is_number()) throw Error(ErrorKind::kBadConfig, std::string(key) + " must be a number");
  return j.get<double>();
}

std::pair<double, double> Pair(const json& j, const char* key) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw Error(ErrorKind::kBadConfig, std::string(key) + " must be [low, high]");
  }
  const double lo = j[0].get<double>();
  const double hi = j[1].get<double>();
  if (!(lo < hi)) throw Error(ErrorKind::kBadConfig, std::string(key) + " needs low < high");
  return {lo, hi};
}

}  // namespace

PipelineConfig LoadPipelineConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kBadConfig, "cannot open config " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::kBadConfig, path.string() + ": " + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::kBadConfig, "config must be a JSON object");

  PipelineConfig cfg;
  for (const auto& [key, value] : doc.items()) {
    if (key == "fps") {
      cfg.mapping.fps = Number(value, "fps");
      if (!(cfg.mapping.fps > 0)) throw Error(ErrorKind::kBadConfig, "fps must be > 0");
    } else if (key == "smoothing_alpha") {
      cfg.mapping.smoothing_alpha = Number(value, "smoothing_alpha");
      if (!(cfg.mapping.smoothing_alpha >= 0 && cfg.mapping.smoothing_alpha <= 1)) {
        throw Error(ErrorKind::kBadConfig, "smoothing_alpha must be in [0, 1]");
      }
    } else if (key == "hardness_thresholds") {
      const auto [lo, hi] = Pair(value, "hardness_thresholds");
      if (lo <= 0 || hi > 1) throw Error(ErrorKind::kBadConfig, "hardness thresholds in (0, 1]");
      cfg.mapping.hardness_low = lo;
      cfg.mapping.hardness_high = hi;
    } else if (key == "brightness_min_hz") {
      cfg.features.brightness_min_hz = Number(value, "brightness_min_hz");
    } else if (key == "warmth_band_hz") {
      std::tie(cfg.features.warmth_low_hz, cfg.features.warmth_high_hz) =
          Pair(value, "warmth_band_hz");
    } else if (key == "depth_max_hz") {
      cfg.features.depth_max_hz = Number(value, "depth_max_hz");
    } else if (key == "peak_floor_db") {
      cfg.features.peak_floor_db = Number(value, "peak_floor_db");
    } else if (key == "max_peaks") {
      const double n = Number(value, "max_peaks");
      if (n < 1) throw Error(ErrorKind::kBadConfig, "max_peaks must be >= 1");
      cfg.features.max_peaks = static_cast<std::size_t>(n);
    } else {
      throw Error(ErrorKind::kBadConfig, "unknown config key '" + key + "'");
    }
  }
  return cfg;
}

PipelineConfig PipelineConfigFromEnvironment() {
  const char* path = std::getenv(kConfigEnvVar);
  if (path == nullptr || *path == '\0') return {};
  return LoadPipelineConfig(path);
}

}  // namespace tailors
