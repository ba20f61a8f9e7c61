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

// Newline-delimited frame files.
//
// Line 1 is the header object:
//   {"schema_version":1,"fps":30,"duration_s":12.5,"track_id":"song"}
// Every following line is one frame:
//   {"t":0.033333,"object":{"dispersion":..,"metalness":..,"hue_deg":..},
//    "background":{"kind":"water","surface_roughness":..,"hue_deg":..,
//                  "value":..,"saturation":..}}
// Numbers carry at most six fractional digits. The same text, minus the
// newline, is the payload of each live-stream message.

#ifndef TAILORS_FRAME_STREAM_H_
#define TAILORS_FRAME_STREAM_H_

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tailors/timbral_features.h"
#include "tailors/visual_mapping.h"

namespace tailors {

inline constexpr int kSchemaVersion = 1;

struct StreamHeader {
  int schema_version = kSchemaVersion;
  double fps = 30.0;
  double duration_s = 0.0;
  std::string track_id;

  bool operator==(const StreamHeader&) const = default;
};

struct FrameStream {
  StreamHeader header;
  std::vector<VisualFrame> frames;
};

// Fixed six-digit rounding with trailing zeros trimmed ("0.5", "270").
std::string FormatNumber(double value);

std::string HeaderLine(const StreamHeader& header);
std::string FrameLine(const VisualFrame& frame);

// Writes the header line followed by one line per frame. Throws
// Error{kSinkWriteFailure} when the sink goes bad.
void EmitFrames(std::span<const VisualFrame> frames, const StreamHeader& header,
                std::ostream& sink);

// Parses and validates a frame file. Throws Error{kSchemaMismatch} naming the
// offending line.
FrameStream ParseFrameStream(std::istream& in);

StreamHeader ParseHeaderLine(std::string_view line);
VisualFrame ParseFrameLine(std::string_view line);

// Diagnostic dump: one object per hop with "t" and the eight raw channels.
void WriteFeatureDump(const TimbralTimeSeries& series, std::ostream& sink);

}  // namespace tailors

#endif  // TAILORS_FRAME_STREAM_H_
