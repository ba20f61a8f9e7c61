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

#ifndef TAILORS_CONFIG_H_
#define TAILORS_CONFIG_H_

#include <filesystem>

#include "tailors/timbral_features.h"
#include "tailors/visual_mapping.h"

namespace tailors {

inline constexpr const char* kConfigEnvVar = "TAILORS_CONFIG";

struct PipelineConfig {
  FeatureConfig features;
  MappingConfig mapping;
};

// Reads a JSON object overriding any of:
//   fps, smoothing_alpha, hardness_thresholds: [low, high],
//   brightness_min_hz, warmth_band_hz: [low, high], depth_max_hz,
//   peak_floor_db, max_peaks
// Unknown keys and out-of-range values throw Error{kBadConfig}.
PipelineConfig LoadPipelineConfig(const std::filesystem::path& path);

// Defaults, overridden by the file named in $TAILORS_CONFIG when set.
PipelineConfig PipelineConfigFromEnvironment();

}  // namespace tailors

#endif  // TAILORS_CONFIG_H_
