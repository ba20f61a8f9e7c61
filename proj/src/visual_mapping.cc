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

#include "tailors/visual_mapping.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "tailors/error.h"

namespace tailors {

namespace {

void RequireUnit(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw Error(ErrorKind::kOutOfRange,
                std::string(what) + " = " + std::to_string(x) + " outside [0, 1]");
  }
}

// Guards against duration * fps landing a hair below an integer.
constexpr double kFrameCountSlack = 1e-9;

}  // namespace

std::string_view BackgroundKindName(BackgroundKind kind) {
  switch (kind) {
    case BackgroundKind::kCloud: return "cloud";
    case BackgroundKind::kWater: return "water";
    case BackgroundKind::kIce: return "ice";
  }
  return "cloud";
}

std::optional<BackgroundKind> ParseBackgroundKind(std::string_view name) {
  if (name == "cloud") return BackgroundKind::kCloud;
  if (name == "water") return BackgroundKind::kWater;
  if (name == "ice") return BackgroundKind::kIce;
  return std::nullopt;
}

ChannelRanges ComputeChannelRanges(const TimbralTimeSeries& series) {
  if (series.frames.empty()) {
    throw Error(ErrorKind::kEmptySeries, "no timbral frames");
  }
  ChannelRanges r;
  for (std::size_t c = 0; c < kNumChannels; ++c) {
    const auto member = kChannels[c];
    const auto [lo, hi] = std::minmax_element(
        series.frames.begin(), series.frames.end(),
        [member](const TimbralFrame& a, const TimbralFrame& b) { return a.*member < b.*member; });
    r.min[c] = (*lo).*member;
    r.max[c] = (*hi).*member;
  }
  return r;
}

ChannelRanges MergeChannelRanges(const ChannelRanges& a, const ChannelRanges& b) {
  ChannelRanges r;
  for (std::size_t c = 0; c < kNumChannels; ++c) {
    r.min[c] = std::min(a.min[c], b.min[c]);
    r.max[c] = std::max(a.max[c], b.max[c]);
  }
  return r;
}

double NormalizeToRange(double x, double min, double max) {
  if (!(max > min)) return 0.5;
  return std::clamp((x - min) / (max - min), 0.0, 1.0);
}

std::vector<double> MinMaxNormalize(std::span<const double> series) {
  if (series.empty()) {
    throw Error(ErrorKind::kEmptySeries, "cannot normalize an empty series");
  }
  for (double x : series) {
    if (!std::isfinite(x)) throw Error(ErrorKind::kOutOfRange, "non-finite value in series");
  }
  const auto [lo, hi] = std::minmax_element(series.begin(), series.end());
  const double min = *lo;
  const double max = *hi;
  std::vector<double> out(series.size());
  std::transform(series.begin(), series.end(), out.begin(),
                 [&](double x) { return NormalizeToRange(x, min, max); });
  return out;
}

double HueFromWarmth(double warmth, const MappingConfig& config) {
  RequireUnit(warmth, "warmth");
  return config.hue_cold_deg - (config.hue_cold_deg - config.hue_warm_deg) * warmth;
}

VocalVisualParams MapVocal(double roughness, double sharpness, double warmth,
                           const MappingConfig& config) {
  RequireUnit(roughness, "vocal roughness");
  RequireUnit(sharpness, "vocal sharpness");
  return {roughness, sharpness, HueFromWarmth(warmth, config)};
}

BackgroundKind ClassifyHardness(double hardness, const MappingConfig& config) {
  RequireUnit(hardness, "hardness");
  if (hardness < config.hardness_low) return BackgroundKind::kCloud;
  if (hardness < config.hardness_high) return BackgroundKind::kWater;
  return BackgroundKind::kIce;
}

BackgroundVisualParams MapBackground(double roughness, double depth, double brightness,
                                     double hardness, double warmth,
                                     const MappingConfig& config) {
  RequireUnit(roughness, "background roughness");
  RequireUnit(depth, "depth");
  RequireUnit(brightness, "brightness");
  BackgroundVisualParams p;
  p.kind = ClassifyHardness(hardness, config);
  p.surface_roughness = roughness;
  p.hue_deg = HueFromWarmth(warmth, config);
  p.value = brightness;
  p.saturation = depth;
  return p;
}

std::vector<double> ExponentialSmooth(std::span<const double> series, double alpha) {
  RequireUnit(alpha, "smoothing alpha");
  std::vector<double> out(series.size());
  for (std::size_t k = 0; k < series.size(); ++k) {
    out[k] = k == 0 ? series[0] : alpha * series[k] + (1.0 - alpha) * out[k - 1];
  }
  return out;
}

std::vector<VisualFrame> MapTrack(const TimbralTimeSeries& series, const MappingConfig& config,
                                  const ChannelRanges* ranges) {
  if (series.frames.empty()) {
    throw Error(ErrorKind::kEmptySeries, "no timbral frames to map");
  }
  if (!(config.fps > 0.0) || !(series.hop_seconds > 0.0)) {
    throw Error(ErrorKind::kOutOfRange, "fps and hop must be positive");
  }
  const ChannelRanges track_ranges = ranges ? *ranges : ComputeChannelRanges(series);

  const std::size_t n = series.frames.size();
  std::array<std::vector<double>, kNumChannels> channels;
  std::vector<double> raw(n);
  for (std::size_t c = 0; c < kNumChannels; ++c) {
    for (std::size_t k = 0; k < n; ++k) {
      raw[k] = NormalizeToRange(series.frames[k].*kChannels[c], track_ranges.min[c],
                                track_ranges.max[c]);
    }
    channels[c] = ExponentialSmooth(raw, config.smoothing_alpha);
  }

  const double duration = series.duration_seconds > 0.0
                              ? series.duration_seconds
                              : static_cast<double>(n) * series.hop_seconds;
  const auto count =
      static_cast<std::size_t>(std::floor(duration * config.fps + kFrameCountSlack));
  std::vector<VisualFrame> frames;
  frames.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double t = static_cast<double>(k) / config.fps;
    const auto hop_index = std::min<std::size_t>(
        static_cast<std::size_t>(std::llround(t / series.hop_seconds)), n - 1);
    auto at = [&](std::size_t c) { return channels[c][hop_index]; };
    VisualFrame f;
    f.t = t;
    f.object = MapVocal(at(0), at(1), at(2), config);
    f.background = MapBackground(at(3), at(4), at(5), at(6), at(7), config);
    frames.push_back(f);
  }
  return frames;
}

}  // namespace tailors
