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

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tailors/error.h"

namespace tailors {
namespace {

constexpr const char* kHeaderRow = "participant_id,music_id,condition,survey,feature,score\n";

std::vector<SurveyRecord> Parse(const std::string& body) {
  std::istringstream in(kHeaderRow + body);
  return ParseSurveyCsv(in);
}

Error ParseFailure(const std::string& text) {
  std::istringstream in(text);
  try {
    ParseSurveyCsv(in);
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "accepted: " << text;
  return Error(ErrorKind::kBadConfig, "");
}

std::string Pid(int p) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "P%02d", p);
  return buf;
}

// Every participant answers every item for every track and condition.
std::string FullDesign(int participants, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> score(1, 7);
  std::string csv = kHeaderRow;
  for (int p = 1; p <= participants; ++p)
    for (int m = 1; m <= 20; ++m)
      for (Condition c : kAllConditions)
        for (Survey s : kAllSurveys)
          for (std::string_view f : FeaturesOf(s)) {
            csv += Pid(p) + "," + std::to_string(m) + "," + std::string(ConditionName(c)) + "," +
                   std::string(SurveyName(s)) + "," + std::string(f) + "," +
                   std::to_string(score(rng)) + "\n";
          }
  return csv;
}

TEST(SurveyCsvTest, SingleValidRow) {
  const auto records = Parse("P01,1,C,timbre,warm,5\n");
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0], (SurveyRecord{"P01", 1, Condition::kC, Survey::kTimbre, "warm", 5}));
}

TEST(SurveyCsvTest, ToleratesCrlfAndBlankTrailingLine) {
  std::istringstream in("participant_id,music_id,condition,survey,feature,score\r\n"
                        "P01,20,A,imagery,flow,1\r\n\n");
  EXPECT_EQ(ParseSurveyCsv(in).size(), 1u);
}

TEST(SurveyCsvTest, ErrorKindsNameTheLine) {
  const std::string h = kHeaderRow;
  struct Case {
    std::string text;
    ErrorKind kind;
    const char* line;
  };
  const std::vector<Case> cases = {
      {"id,music,condition,survey,feature,score\n", ErrorKind::kBadHeader, "line 1"},
      {"", ErrorKind::kBadHeader, "line 1"},
      {h + "P01,1,C,timbre,warm,8\n", ErrorKind::kScoreOutOfRange, "line 2"},
      {h + "P01,1,C,timbre,warm,0\n", ErrorKind::kScoreOutOfRange, "line 2"},
      {h + "P01,1,C,timbre,warm,5\nP01,1,D,timbre,warm,5\n", ErrorKind::kInvalidCondition,
       "line 3"},
      {h + "P01,1,C,timbre,flow,5\n", ErrorKind::kInvalidFeature, "line 2"},
      {h + "P01,1,C,smell,warm,5\n", ErrorKind::kInvalidSurvey, "line 2"},
      {h + "P01,21,C,timbre,warm,5\n", ErrorKind::kInvalidRecord, "line 2"},
      {h + "P01,x,C,timbre,warm,5\n", ErrorKind::kInvalidRecord, "line 2"},
      {h + "P01,1,C,timbre,warm\n", ErrorKind::kInvalidRecord, "line 2"},
      {h + ",1,C,timbre,warm,5\n", ErrorKind::kInvalidRecord, "line 2"},
      {h + "P01,1,C,timbre,warm,5\nP02,1,C,timbre,warm,5\nP01,1,C,timbre,warm,3\n",
       ErrorKind::kDuplicateKey, "line 4"},
  };
  for (const Case& c : cases) {
    const Error e = ParseFailure(c.text);
    EXPECT_EQ(e.kind(), c.kind) << c.text;
    EXPECT_NE(std::string(e.what()).find(c.line), std::string::npos) << e.what();
  }
}

TEST(SurveyCsvTest, FullDesignCounts) {
  const auto records = Parse(FullDesign(27, 1).substr(std::string(kHeaderRow).size()));
  EXPECT_EQ(records.size(), 40500u);
  const SurveyIndex index(records);
  EXPECT_EQ(index.participants().size(), 27u);
  std::size_t per_item = 0;
  for (Condition c : kAllConditions) per_item += index.Scores(Survey::kImagery, "flow", c).size();
  EXPECT_EQ(per_item, 1620u);
}

TEST(SurveyCsvTest, LoadFromFile) {
  const auto path = std::filesystem::temp_directory_path() / "tailors_survey_test.csv";
  {
    std::ofstream out(path);
    out << kHeaderRow << "P01,1,B,entertainment,rhythm,7\n";
  }
  EXPECT_EQ(LoadSurveyCsv(path).size(), 1u);
  std::filesystem::remove(path);
  try {
    LoadSurveyCsv(path);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kFileNotFound);
  }
}

TEST(ParticipantMeansTest, ConstantAnswersGiveConstantMean) {
  std::string body;
  for (int m = 1; m <= 20; ++m) body += "P01," + std::to_string(m) + ",A,imagery,force,4\n";
  const auto records = Parse(body);
  const auto means = AggregateParticipantMeans(records, Survey::kImagery, "force", Condition::kA);
  ASSERT_EQ(means.size(), 1u);
  EXPECT_EQ(means[0].participant_id, "P01");
  EXPECT_EQ(means[0].mean, 4.0);
}

TEST(ParticipantMeansTest, MatchesBruteForceSums) {
  const auto records = Parse(FullDesign(27, 9).substr(std::string(kHeaderRow).size()));
  const SurveyIndex index(records);
  for (Survey s : kAllSurveys) {
    for (std::string_view f : FeaturesOf(s)) {
      for (Condition c : kAllConditions) {
        std::map<std::string, std::pair<double, int>> acc;
        for (const auto& r : records) {
          if (r.survey == s && r.feature == f && r.condition == c) {
            acc[r.participant_id].first += r.score;
            acc[r.participant_id].second += 1;
          }
        }
        const auto means = index.ParticipantMeans(s, f, c);
        ASSERT_EQ(means.size(), 27u);
        for (const auto& m : means) {
          const auto& [sum, count] = acc.at(m.participant_id);
          EXPECT_EQ(count, 20);
          EXPECT_NEAR(m.mean, sum / count, 1e-12);
        }
      }
    }
  }
}

TEST(ParticipantMeansTest, MissingCellThrows) {
  const auto records = Parse("P01,1,A,imagery,flow,4\nP02,1,B,imagery,flow,4\n");
  const SurveyIndex index(records);
  for (Condition c : {Condition::kA, Condition::kC}) {
    try {
      index.ParticipantMeans(Survey::kImagery, "flow", c);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kMissingCell);
    }
  }
}

TEST(MatchedPairsTest, PairsOnParticipantAndMusic) {
  const auto records = Parse(
      "P01,1,A,timbre,hard,2\nP01,1,C,timbre,hard,5\n"
      "P01,2,A,timbre,hard,3\n"
      "P02,1,A,timbre,hard,6\nP02,1,C,timbre,hard,1\n");
  const SurveyIndex index(records);
  const auto pairs = index.MatchedPairs(Survey::kTimbre, "hard", Condition::kA, Condition::kC);
  EXPECT_EQ(pairs, (std::vector<std::pair<double, double>>{{2, 5}, {6, 1}}));
}

TEST(VocabularyTest, NamesRoundTrip) {
  EXPECT_EQ(FeaturesOf(Survey::kTimbre).size(), 12u);
  EXPECT_EQ(FeaturesOf(Survey::kImagery).size(), 5u);
  EXPECT_EQ(FeaturesOf(Survey::kEntertainment).size(), 8u);
  for (Condition c : kAllConditions) EXPECT_EQ(ParseCondition(ConditionName(c)), c);
  for (Survey s : kAllSurveys) EXPECT_EQ(ParseSurvey(SurveyName(s)), s);
  EXPECT_FALSE(ParseCondition("D").has_value());
}

}  // namespace
}  // namespace tailors
