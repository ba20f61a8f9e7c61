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

#ifndef TAILORS_ERROR_H_
#define TAILORS_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace tailors {

enum class ErrorKind {
  // audio_io
  kMalformedHeader,
  kUnsupportedFormat,
  kTruncatedData,
  kFileNotFound,
  kSampleRateMismatch,
  kWindowTooLarge,
  // timbral_features
  kAudioTooShort,
  // visual_mapping
  kEmptySeries,
  kOutOfRange,
  // frame_stream
  kSinkWriteFailure,
  kSchemaMismatch,
  kPortInUse,
  kBadConfig,
  // survey_stats
  kBadHeader,
  kInvalidCondition,
  kInvalidSurvey,
  kInvalidFeature,
  kInvalidRecord,
  kScoreOutOfRange,
  kDuplicateKey,
  kMissingCell,
  kDegenerateInput,
  kAllZeroDifferences,
  kRankDeficient,
  kCoefficientOutOfRange,
};

std::string_view ErrorKindName(ErrorKind kind);

// All recoverable failures raised by the library. The kind is stable and
// machine-checkable; the message is a one-line human diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(ErrorKindName(kind)) + ": " + message),
        kind_(kind),
        detail_(message) {}

  ErrorKind kind() const { return kind_; }
  // The message without the kind prefix.
  const std::string& detail() const { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

inline std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kMalformedHeader: return "MalformedHeader";
    case ErrorKind::kUnsupportedFormat: return "UnsupportedFormat";
    case ErrorKind::kTruncatedData: return "TruncatedData";
    case ErrorKind::kFileNotFound: return "FileNotFound";
    case ErrorKind::kSampleRateMismatch: return "SampleRateMismatch";
    case ErrorKind::kWindowTooLarge: return "WindowTooLarge";
    case ErrorKind::kAudioTooShort: return "AudioTooShort";
    case ErrorKind::kEmptySeries: return "EmptySeries";
    case ErrorKind::kOutOfRange: return "OutOfRange";
    case ErrorKind::kSinkWriteFailure: return "SinkWriteFailure";
    case ErrorKind::kSchemaMismatch: return "SchemaMismatch";
    case ErrorKind::kPortInUse: return "PortInUse";
    case ErrorKind::kBadConfig: return "BadConfig";
    case ErrorKind::kBadHeader: return "BadHeader";
    case ErrorKind::kInvalidCondition: return "InvalidCondition";
    case ErrorKind::kInvalidSurvey: return "InvalidSurvey";
    case ErrorKind::kInvalidFeature: return "InvalidFeature";
    case ErrorKind::kInvalidRecord: return "InvalidRecord";
    case ErrorKind::kScoreOutOfRange: return "ScoreOutOfRange";
    case ErrorKind::kDuplicateKey: return "DuplicateKey";
    case ErrorKind::kMissingCell: return "MissingCell";
    case ErrorKind::kDegenerateInput: return "DegenerateInput";
    case ErrorKind::kAllZeroDifferences: return "AllZeroDifferences";
    case ErrorKind::kRankDeficient: return "RankDeficient";
    case ErrorKind::kCoefficientOutOfRange: return "CoefficientOutOfRange";
  }
  return "Unknown";
}

}  // namespace tailors

#endif  // TAILORS_ERROR_H_
