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

// Min-max normalization and the timbre-to-visual mapping rules.
//
// Vocal stem -> the sphere-cluster object:
//   roughness -> dispersion of the sub-spheres
//   sharpness -> metalness (plain to metal texture)
//   warmth    -> hue (cold violet to warm orange)
// Background stem -> the nature backdrop:
//   hardness  -> kind (soft: cloud, neutral: water, strong: ice)
//   roughness -> surface roughness of the backdrop
//   warmth    -> hue, brightness -> value, depth -> saturation

#ifndef TAILORS_VISUAL_MAPPING_H_
#define TAILORS_VISUAL_MAPPING_H_

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "tailors/timbral_features.h"

namespace tailors {

enum class BackgroundKind { kCloud = 0, kWater = 1, kIce = 2 };

std::string_view BackgroundKindName(BackgroundKind kind);
// Inverse of BackgroundKindName; nullopt for unknown names.
std::optional<BackgroundKind> ParseBackgroundKind(std::string_view name);

struct VocalVisualParams {
  double dispersion = 0.0;
  double metalness = 0.0;
  double hue_deg = 0.0;

  bool operator==(const VocalVisualParams&) const = default;
};

struct BackgroundVisualParams {
  BackgroundKind kind = BackgroundKind::kCloud;
  double surface_roughness = 0.0;
  double hue_deg = 0.0;
  double value = 0.0;
  double saturation = 0.0;

  bool operator==(const BackgroundVisualParams&) const = default;
};

struct VisualFrame {
  double t = 0.0;
  VocalVisualParams object;
  BackgroundVisualParams background;

  bool operator==(const VisualFrame&) const = default;
};

struct MappingConfig {
  double fps = 30.0;
  double smoothing_alpha = 0.2;
  // Normalized hardness below hardness_low is cloud, below hardness_high water,
  // otherwise ice.
  double hardness_low = 1.0 / 3.0;
  double hardness_high = 2.0 / 3.0;
  double hue_cold_deg = 270.0;
  double hue_warm_deg = 30.0;
};

inline constexpr std::size_t kNumChannels = 8;

// Accessors for the eight raw channels of a TimbralFrame, in declaration
// order.
inline constexpr std::array<double TimbralFrame::*, kNumChannels> kChannels = {
    &TimbralFrame::vocal_roughness, &TimbralFrame::vocal_sharpness,
    &TimbralFrame::vocal_warmth,    &TimbralFrame::bg_roughness,
    &TimbralFrame::bg_depth,        &TimbralFrame::bg_brightness,
    &TimbralFrame::bg_hardness,     &TimbralFrame::bg_warmth};

inline constexpr std::array<std::string_view, kNumChannels> kChannelNames = {
    "vocal_roughness", "vocal_sharpness", "vocal_warmth", "bg_roughness",
    "bg_depth",        "bg_brightness",   "bg_hardness",  "bg_warmth"};

// Extremes of each raw channel. Per-track normalization computes these from
// the track itself; corpus-wide normalization merges them across tracks.
struct ChannelRanges {
  std::array<double, kNumChannels> min{};
  std::array<double, kNumChannels> max{};
};

ChannelRanges ComputeChannelRanges(const TimbralTimeSeries& series);
ChannelRanges MergeChannelRanges(const ChannelRanges& a, const ChannelRanges& b);

// (x - min) / (max - min); a constant series maps to 0.5 everywhere.
// Throws Error{kEmptySeries} and Error{kOutOfRange} for non-finite values.
std::vector<double> MinMaxNormalize(std::span<const double> series);

// Same rule against externally supplied extremes, clamped to [0, 1].
double NormalizeToRange(double x, double min, double max);

// hue = cold - (cold - warm) * w: 270 deg at w = 0, 30 deg at w = 1.
double HueFromWarmth(double warmth, const MappingConfig& config = {});

VocalVisualParams MapVocal(double roughness, double sharpness, double warmth,
                           const MappingConfig& config = {});

BackgroundKind ClassifyHardness(double hardness, const MappingConfig& config = {});

BackgroundVisualParams MapBackground(double roughness, double depth, double brightness,
                                     double hardness, double warmth,
                                     const MappingConfig& config = {});

// y_0 = x_0, y_k = alpha * x_k + (1 - alpha) * y_{k-1}.
std::vector<double> ExponentialSmooth(std::span<const double> series, double alpha);

// Normalizes each channel over the track (or over `ranges` when given),
// smooths it, resamples at t = k / fps from the nearest hop and maps the
// result. Emits floor(duration * fps) frames.
std::vector<VisualFrame> MapTrack(const TimbralTimeSeries& series,
                                  const MappingConfig& config = {},
                                  const ChannelRanges* ranges = nullptr);

}  // namespace tailors

#endif  // TAILORS_VISUAL_MAPPING_H_
