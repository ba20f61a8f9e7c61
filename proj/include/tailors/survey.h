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

// Likert survey records and per-cell aggregation.

#ifndef TAILORS_SURVEY_H_
#define TAILORS_SURVEY_H_

#include <array>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace tailors {

// A: music only, B: basic visualization, C: timbre visualization.
enum class Condition { kA = 0, kB = 1, kC = 2 };
enum class Survey { kTimbre = 0, kImagery = 1, kEntertainment = 2 };

inline constexpr std::array<Condition, 3> kAllConditions = {Condition::kA, Condition::kB,
                                                            Condition::kC};
inline constexpr std::array<Survey, 3> kAllSurveys = {Survey::kTimbre, Survey::kImagery,
                                                      Survey::kEntertainment};

// Questionnaire vocabularies in printed order.
inline constexpr std::array<std::string_view, 12> kTimbreFeatures = {
    "hard", "soft", "deep",  "shallow", "bright", "dark",
    "warm", "cold", "rough", "smooth",  "sharp",  "blunt"};
inline constexpr std::array<std::string_view, 5> kImageryFeatures = {
    "flow", "force", "interior", "movement", "wandering"};
inline constexpr std::array<std::string_view, 8> kEntertainmentFeatures = {
    "stimulated", "dancing", "entertained", "energized",
    "moving",     "animated", "excited",    "rhythm"};

inline constexpr int kMinScore = 1;
inline constexpr int kMaxScore = 7;
inline constexpr int kMaxMusicId = 20;

std::span<const std::string_view> FeaturesOf(Survey survey);
std::string_view ConditionName(Condition condition);
std::string_view SurveyName(Survey survey);
std::optional<Condition> ParseCondition(std::string_view text);
std::optional<Survey> ParseSurvey(std::string_view text);

struct SurveyRecord {
  std::string participant_id;
  int music_id = 0;
  Condition condition = Condition::kA;
  Survey survey = Survey::kTimbre;
  std::string feature;
  int score = 0;

  bool operator==(const SurveyRecord&) const = default;
};

// Parses `participant_id,music_id,condition,survey,feature,score` rows. Every
// error names the offending line. Throws Error{kBadHeader, kInvalidRecord,
// kInvalidCondition, kInvalidSurvey, kInvalidFeature, kScoreOutOfRange,
// kDuplicateKey}.
std::vector<SurveyRecord> ParseSurveyCsv(std::istream& in);
std::vector<SurveyRecord> LoadSurveyCsv(const std::filesystem::path& path);

struct ParticipantMean {
  std::string participant_id;
  double mean = 0.0;
};

// Answers grouped by cell for repeated lookups.
class SurveyIndex {
 public:
  explicit SurveyIndex(std::span<const SurveyRecord> records);

  // Participants in lexicographic order.
  const std::vector<std::string>& participants() const { return participants_; }

  // One mean per participant over that participant's music-level scores.
  // Throws Error{kMissingCell} if any participant has no answers in the cell.
  std::vector<ParticipantMean> ParticipantMeans(Survey survey, std::string_view feature,
                                                Condition condition) const;

  // Every score in the cell, ordered by (participant, music).
  std::vector<double> Scores(Survey survey, std::string_view feature,
                             Condition condition) const;

  // Scores matched on (participant, music) across two conditions. Unmatched
  // answers are skipped.
  std::vector<std::pair<double, double>> MatchedPairs(Survey survey, std::string_view feature,
                                                      Condition x, Condition y) const;

 private:
  using CellKey = std::tuple<Survey, std::string, Condition>;
  // participant -> music -> score
  using Cell = std::map<std::string, std::map<int, int>>;

  const Cell* Find(Survey survey, std::string_view feature, Condition condition) const;

  std::vector<std::string> participants_;
  std::map<CellKey, Cell> cells_;
};

// Convenience form of SurveyIndex::ParticipantMeans.
std::vector<ParticipantMean> AggregateParticipantMeans(std::span<const SurveyRecord> records,
                                                       Survey survey, std::string_view feature,
                                                       Condition condition);

}  // namespace tailors

#endif  // TAILORS_SURVEY_H_
