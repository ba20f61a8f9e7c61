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

#include "tailors/survey.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "tailors/error.h"

namespace tailors {

namespace {

constexpr std::string_view kCsvHeader = "participant_id,music_id,condition,survey,feature,score";

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.remove_suffix(1);
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  return s;
}

std::vector<std::string_view> SplitComma(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    out.push_back(Trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::optional<int> ParseInt(std::string_view s) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

[[noreturn]] void Fail(ErrorKind kind, std::size_t line_no, const std::string& what) {
  throw Error(kind, "line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

std::span<const std::string_view> FeaturesOf(Survey survey) {
  switch (survey) {
    case Survey::kTimbre: return kTimbreFeatures;
    case Survey::kImagery: return kImageryFeatures;
    case Survey::kEntertainment: return kEntertainmentFeatures;
  }
  return {};
}

std::string_view ConditionName(Condition condition) {
  switch (condition) {
    case Condition::kA: return "A";
    case Condition::kB: return "B";
    case Condition::kC: return "C";
  }
  return "?";
}

std::string_view SurveyName(Survey survey) {
  switch (survey) {
    case Survey::kTimbre: return "timbre";
    case Survey::kImagery: return "imagery";
    case Survey::kEntertainment: return "entertainment";
  }
  return "?";
}

std::optional<Condition> ParseCondition(std::string_view text) {
  if (text == "A") return Condition::kA;
  if (text == "B") return Condition::kB;
  if (text == "C") return Condition::kC;
  return std::nullopt;
}

std::optional<Survey> ParseSurvey(std::string_view text) {
  for (Survey s : kAllSurveys) {
    if (SurveyName(s) == text) return s;
  }
  return std::nullopt;
}

std::vector<SurveyRecord> ParseSurveyCsv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || Trim(line) != kCsvHeader) {
    throw Error(ErrorKind::kBadHeader,
                "line 1: expected header '" + std::string(kCsvHeader) + "'");
  }
  std::vector<SurveyRecord> records;
  std::set<std::tuple<std::string, int, Condition, Survey, std::string>> seen;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    const auto fields = SplitComma(line);
    if (fields.size() != 6) {
      Fail(ErrorKind::kInvalidRecord, line_no,
           "expected 6 fields, got " + std::to_string(fields.size()));
    }
    SurveyRecord r;
    r.participant_id = std::string(fields[0]);
    if (r.participant_id.empty()) Fail(ErrorKind::kInvalidRecord, line_no, "empty participant_id");
    const auto music = ParseInt(fields[1]);
    if (!music || *music < 1 || *music > kMaxMusicId) {
      Fail(ErrorKind::kInvalidRecord, line_no, "music_id '" + std::string(fields[1]) + "'");
    }
    r.music_id = *music;
    const auto condition = ParseCondition(fields[2]);
    if (!condition) {
      Fail(ErrorKind::kInvalidCondition, line_no, "condition '" + std::string(fields[2]) + "'");
    }
    r.condition = *condition;
    const auto survey = ParseSurvey(fields[3]);
    if (!survey) Fail(ErrorKind::kInvalidSurvey, line_no, "survey '" + std::string(fields[3]) + "'");
    r.survey = *survey;
    const auto vocab = FeaturesOf(r.survey);
    if (std::find(vocab.begin(), vocab.end(), fields[4]) == vocab.end()) {
      Fail(ErrorKind::kInvalidFeature, line_no,
           "feature '" + std::string(fields[4]) + "' not in the " +
               std::string(SurveyName(r.survey)) + " vocabulary");
    }
    r.feature = std::string(fields[4]);
    const auto score = ParseInt(fields[5]);
    if (!score) Fail(ErrorKind::kInvalidRecord, line_no, "score '" + std::string(fields[5]) + "'");
    if (*score < kMinScore || *score > kMaxScore) {
      Fail(ErrorKind::kScoreOutOfRange, line_no, "score " + std::to_string(*score) + " not in 1..7");
    }
    r.score = *score;
    if (!seen.emplace(r.participant_id, r.music_id, r.condition, r.survey, r.feature).second) {
      Fail(ErrorKind::kDuplicateKey, line_no, "duplicate answer for " + r.participant_id);
    }
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<SurveyRecord> LoadSurveyCsv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kFileNotFound, "cannot open " + path.string());
  try {
    return ParseSurveyCsv(in);
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.detail());
  }
}

SurveyIndex::SurveyIndex(std::span<const SurveyRecord> records) {
  std::set<std::string> ids;
  for (const SurveyRecord& r : records) {
    ids.insert(r.participant_id);
    cells_[{r.survey, r.feature, r.condition}][r.participant_id][r.music_id] = r.score;
  }
  participants_.assign(ids.begin(), ids.end());
}

const SurveyIndex::Cell* SurveyIndex::Find(Survey survey, std::string_view feature,
                                           Condition condition) const {
  auto it = cells_.find({survey, std::string(feature), condition});
  return it == cells_.end() ? nullptr : &it->second;
}

std::vector<ParticipantMean> SurveyIndex::ParticipantMeans(Survey survey,
                                                           std::string_view feature,
                                                           Condition condition) const {
  const Cell* cell = Find(survey, feature, condition);
  std::vector<ParticipantMean> out;
  out.reserve(participants_.size());
  for (const std::string& id : participants_) {
    const auto it = cell ? cell->find(id) : Cell::const_iterator{};
    if (!cell || it == cell->end() || it->second.empty()) {
      throw Error(ErrorKind::kMissingCell,
                  id + " has no " + std::string(SurveyName(survey)) + "/" +
                      std::string(feature) + " answers in condition " +
                      std::string(ConditionName(condition)));
    }
    double sum = 0.0;
    for (const auto& [music, score] : it->second) sum += score;
    out.push_back({id, sum / static_cast<double>(it->second.size())});
  }
  return out;
}

std::vector<double> SurveyIndex::Scores(Survey survey, std::string_view feature,
                                        Condition condition) const {
  std::vector<double> out;
  if (const Cell* cell = Find(survey, feature, condition)) {
    for (const auto& [id, answers] : *cell) {
      for (const auto& [music, score] : answers) out.push_back(score);
    }
  }
  return out;
}

std::vector<std::pair<double, double>> SurveyIndex::MatchedPairs(Survey survey,
                                                                 std::string_view feature,
                                                                 Condition x,
                                                                 Condition y) const {
  std::vector<std::pair<double, double>> out;
  const Cell* cx = Find(survey, feature, x);
  const Cell* cy = Find(survey, feature, y);
  if (!cx || !cy) return out;
  for (const auto& [id, answers] : *cx) {
    const auto other = cy->find(id);
    if (other == cy->end()) continue;
    for (const auto& [music, score] : answers) {
      const auto match = other->second.find(music);
      if (match != other->second.end()) out.emplace_back(score, match->second);
    }
  }
  return out;
}

std::vector<ParticipantMean> AggregateParticipantMeans(std::span<const SurveyRecord> records,
                                                       Survey survey, std::string_view feature,
                                                       Condition condition) {
  return SurveyIndex(records).ParticipantMeans(survey, feature, condition);
}

}  // namespace tailors
