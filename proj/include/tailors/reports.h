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

// Report tables over a full survey data set.
//
// Six families are produced, each written as <name>.json and <name>.txt:
//   regression_timbre_imagery         per-condition OLS, 12 timbre IVs -> each imagery DV
//   regression_imagery_entertainment  per-condition OLS, 5 imagery IVs -> each entertainment DV
//   fisher_timbre_imagery             A vs C and B vs C coefficient comparisons
//   fisher_imagery_entertainment      same for the imagery -> entertainment models
//   wilcoxon                          paired condition tests, split significant / not
//   kruskal_wallis                    three-condition test per survey item
// Regressions run on per-participant means. Rows follow survey order, then the
// questionnaire order of each vocabulary.

#ifndef TAILORS_REPORTS_H_
#define TAILORS_REPORTS_H_

#include <filesystem>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "tailors/survey.h"

namespace tailors {

enum class WilcoxonUnit {
  // One pair per (participant, music) answer.
  kParticipantMusic,
  // One pair per participant, using that participant's mean score.
  kParticipantMean,
};

struct ReportOptions {
  // z-score IV and DV means across participants before fitting, so that
  // slopes are standardized betas.
  bool standardize = true;
  WilcoxonUnit wilcoxon_unit = WilcoxonUnit::kParticipantMusic;
  // Regressors removed before fitting (e.g. to break multicollinearity
  // flagged by the condition_number column).
  std::vector<std::string> drop_ivs;
  double significance_level = 0.05;
};

// null, text, number, integer
using ReportValue = std::variant<std::monostate, std::string, double, long long>;

struct ReportTable {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<ReportValue>> rows;
};

struct ReportFamily {
  std::string name;
  std::vector<ReportTable> tables;
};

struct ReportBundle {
  std::vector<ReportFamily> families;

  const ReportFamily* Find(std::string_view name) const;
};

// Throws the underlying Error with the table and cell prepended to its
// message.
ReportBundle BuildReports(std::span<const SurveyRecord> records, const ReportOptions& options = {});

std::string RenderJson(const ReportFamily& family);
std::string RenderText(const ReportFamily& family);

// Writes <dir>/<family>.json and <dir>/<family>.txt, creating dir if needed.
void WriteReports(const ReportBundle& bundle, const std::filesystem::path& dir);

}  // namespace tailors

#endif  // TAILORS_REPORTS_H_
