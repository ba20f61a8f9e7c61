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

#include "tailors/reports.h"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>

#include "json.hpp"
#include "tailors/error.h"
#include "tailors/fisher.h"
#include "tailors/nonparametric.h"
#include "tailors/regression.h"

namespace tailors {

namespace {

using Row = std::vector<ReportValue>;

ReportValue Num(double x) { return x; }
ReportValue Int(long long x) { return x; }
ReportValue Text(std::string_view s) { return std::string(s); }

double Mean(std::span<const double> v) {
  return v.empty() ? 0.0 : std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

void Standardize(Eigen::Ref<Eigen::VectorXd> v) {
  const double mean = v.mean();
  const double var = (v.array() - mean).square().sum() / static_cast<double>(v.size() - 1);
  // A constant column stays constant and is caught as rank deficient.
  v.array() -= mean;
  if (var > 0.0) v /= std::sqrt(var);
}

std::string Context(std::string_view where, const Error& e) {
  return std::string(where) + ": " + e.detail();
}

// One regression direction (e.g. timbre -> imagery).
struct Direction {
  std::string family;
  std::string label;
  Survey iv_survey;
  Survey dv_survey;
};

const Direction kTimbreImagery{"timbre_imagery", "Timbre -> Imagery", Survey::kTimbre,
                               Survey::kImagery};
const Direction kImageryEntertainment{"imagery_entertainment", "Imagery -> Entertainment",
                                      Survey::kImagery, Survey::kEntertainment};

// Slopes keyed by (condition, iv, dv), with the row count of each fit.
struct SlopeTable {
  std::map<std::tuple<Condition, std::string, std::string>, double> slope;
  std::map<Condition, int> n;
};

class Builder {
 public:
  Builder(std::span<const SurveyRecord> records, const ReportOptions& options)
      : index_(records), options_(options) {}

  ReportBundle Build() {
    ReportBundle bundle;
    SlopeTable timbre_imagery;
    SlopeTable imagery_entertainment;
    bundle.families.push_back(Regression(kTimbreImagery, timbre_imagery));
    bundle.families.push_back(Regression(kImageryEntertainment, imagery_entertainment));
    bundle.families.push_back(Fisher(kTimbreImagery, timbre_imagery));
    bundle.families.push_back(Fisher(kImageryEntertainment, imagery_entertainment));
    bundle.families.push_back(Wilcoxon());
    bundle.families.push_back(Kruskal());
    return bundle;
  }

 private:
  std::vector<std::string> Ivs(Survey survey) const {
    std::vector<std::string> out;
    for (std::string_view f : FeaturesOf(survey)) {
      const auto& drop = options_.drop_ivs;
      if (std::find(drop.begin(), drop.end(), f) == drop.end()) out.emplace_back(f);
    }
    return out;
  }

  Eigen::VectorXd MeansVector(Survey survey, std::string_view feature, Condition c) const {
    const auto means = index_.ParticipantMeans(survey, feature, c);
    Eigen::VectorXd v(static_cast<Eigen::Index>(means.size()));
    for (std::size_t i = 0; i < means.size(); ++i) v(static_cast<Eigen::Index>(i)) = means[i].mean;
    if (options_.standardize && v.size() > 1) Standardize(v);
    return v;
  }

  ReportFamily Regression(const Direction& d, SlopeTable& slopes) const {
    ReportFamily family{"regression_" + d.family, {}};
    const std::vector<std::string> ivs = Ivs(d.iv_survey);
    for (Condition c : kAllConditions) {
      const std::string where = fmt::format("{} regression, condition {}", d.label, ConditionName(c));
      ReportTable table;
      table.title = where;
      table.columns = {"iv",          "dv",          "coefficients", "std_err",       "t_value",
                       "p_value",     "stars",       "r_squared",    "adj_r_squared", "f_statistic",
                       "f_p_value",   "df_model",    "df_resid",     "condition_number"};
      try {
        Eigen::MatrixXd x(static_cast<Eigen::Index>(index_.participants().size()),
                          static_cast<Eigen::Index>(ivs.size()));
        for (std::size_t j = 0; j < ivs.size(); ++j) {
          x.col(static_cast<Eigen::Index>(j)) = MeansVector(d.iv_survey, ivs[j], c);
        }
        for (std::string_view dv : FeaturesOf(d.dv_survey)) {
          const RegressionResult fit = [&] {
            try {
              return OlsFit(x, MeansVector(d.dv_survey, dv, c), ivs);
            } catch (const Error& e) {
              throw Error(e.kind(), fmt::format("dv {}: {}", dv, e.detail()));
            }
          }();
          slopes.n[c] = static_cast<int>(x.rows());
          for (const CoefficientRow& r : fit.rows) {
            slopes.slope[{c, r.name, std::string(dv)}] = r.coefficient;
            table.rows.push_back({Text(r.name), Text(dv), Num(r.coefficient), Num(r.std_err),
                                  Num(r.t_value), Num(r.p_value), Text(SignificanceStars(r.p_value)),
                                  Num(fit.r_squared), Num(fit.adj_r_squared), Num(fit.f_statistic),
                                  Num(fit.f_p_value), Int(fit.df_model), Int(fit.df_resid),
                                  Num(fit.condition_number)});
          }
        }
      } catch (const Error& e) {
        throw Error(e.kind(), Context(where, e));
      }
      family.tables.push_back(std::move(table));
    }
    return family;
  }

  ReportFamily Fisher(const Direction& d, const SlopeTable& slopes) const {
    ReportFamily family{"fisher_" + d.family, {}};
    const std::vector<std::string> ivs = Ivs(d.iv_survey);
    for (auto [first, second] : {std::pair{Condition::kA, Condition::kC},
                                 std::pair{Condition::kB, Condition::kC}}) {
      ReportTable table;
      table.title = fmt::format("{} coefficient comparison, {} vs {}", d.label,
                                ConditionName(first), ConditionName(second));
      table.columns = {"iv",      "dv",      "condition_1", "coefficient_1", "condition_2",
                       "coefficient_2", "z_stat", "p_value", "stars", "error"};
      for (std::string_view dv : FeaturesOf(d.dv_survey)) {
        for (const std::string& iv : ivs) {
          const double r1 = slopes.slope.at({first, iv, std::string(dv)});
          const double r2 = slopes.slope.at({second, iv, std::string(dv)});
          Row row{Text(iv), Text(dv), Text(ConditionName(first)), Num(r1),
                  Text(ConditionName(second)), Num(r2)};
          try {
            const FisherComparison f =
                FisherCompare(r1, slopes.n.at(first), r2, slopes.n.at(second));
            row.insert(row.end(), {Num(f.z_stat), Num(f.p_value), Text(f.stars), ReportValue{}});
          } catch (const Error& e) {
            // Reported in the row; a slope outside (-1, 1) has no z transform.
            row.insert(row.end(), {ReportValue{}, ReportValue{}, Text(""),
                                   Text(std::string(ErrorKindName(e.kind())) + ": " + e.detail())});
          }
          table.rows.push_back(std::move(row));
        }
      }
      family.tables.push_back(std::move(table));
    }
    return family;
  }

  std::pair<std::vector<std::pair<double, double>>, std::pair<double, double>> Paired(
      Survey s, std::string_view feature, Condition x, Condition y) const {
    if (options_.wilcoxon_unit == WilcoxonUnit::kParticipantMean) {
      const auto mx = index_.ParticipantMeans(s, feature, x);
      const auto my = index_.ParticipantMeans(s, feature, y);
      std::vector<std::pair<double, double>> pairs;
      std::vector<double> xs, ys;
      for (std::size_t i = 0; i < mx.size(); ++i) {
        pairs.emplace_back(mx[i].mean, my[i].mean);
        xs.push_back(mx[i].mean);
        ys.push_back(my[i].mean);
      }
      return {pairs, {Mean(xs), Mean(ys)}};
    }
    return {index_.MatchedPairs(s, feature, x, y),
            {Mean(index_.Scores(s, feature, x)), Mean(index_.Scores(s, feature, y))}};
  }

  ReportFamily Wilcoxon() const {
    ReportFamily family{"wilcoxon", {}};
    for (Survey s : kAllSurveys) {
      for (auto [x, y] : {std::pair{Condition::kB, Condition::kC},
                          std::pair{Condition::kA, Condition::kC},
                          std::pair{Condition::kA, Condition::kB}}) {
        const std::vector<std::string> columns = {
            "feature", "p_value", "stars", fmt::format("mean_{}", ConditionName(x)),
            fmt::format("mean_{}", ConditionName(y)), "statistic", "n", "error"};
        ReportTable significant{fmt::format("{} survey, {} vs {}: significant", SurveyName(s),
                                            ConditionName(x), ConditionName(y)),
                                columns, {}};
        ReportTable other{fmt::format("{} survey, {} vs {}: not significant", SurveyName(s),
                                      ConditionName(x), ConditionName(y)),
                          columns, {}};
        for (std::string_view feature : FeaturesOf(s)) {
          try {
            const auto [pairs, means] = Paired(s, feature, x, y);
            Row row{Text(feature)};
            bool is_significant = false;
            try {
              const TestResult t = WilcoxonSignedRank(pairs);
              is_significant = t.p_value < options_.significance_level;
              row.insert(row.end(), {Num(t.p_value), Text(SignificanceStars(t.p_value)),
                                     Num(means.first), Num(means.second), Num(t.statistic),
                                     Int(static_cast<long long>(t.n)), ReportValue{}});
            } catch (const Error& e) {
              if (e.kind() != ErrorKind::kAllZeroDifferences) throw;
              // No nonzero difference: nothing to rank, so nothing to flag.
              row.insert(row.end(), {ReportValue{}, Text(""), Num(means.first), Num(means.second),
                                     ReportValue{}, Int(0), Text(ErrorKindName(e.kind()))});
            }
            (is_significant ? significant : other).rows.push_back(std::move(row));
          } catch (const Error& e) {
            throw Error(e.kind(), Context(fmt::format("wilcoxon {} {}", other.title, feature), e));
          }
        }
        family.tables.push_back(std::move(significant));
        family.tables.push_back(std::move(other));
      }
    }
    return family;
  }

  ReportFamily Kruskal() const {
    ReportFamily family{"kruskal_wallis", {}};
    for (Survey s : kAllSurveys) {
      ReportTable table;
      table.title = fmt::format("{} survey, conditions A / B / C", SurveyName(s));
      table.columns = {"feature", "h_statistic", "df", "p_value", "stars",
                       "n",       "mean_A",      "mean_B", "mean_C"};
      for (std::string_view feature : FeaturesOf(s)) {
        std::vector<std::vector<double>> groups;
        for (Condition c : kAllConditions) groups.push_back(index_.Scores(s, feature, c));
        try {
          const TestResult t = KruskalWallis(groups);
          table.rows.push_back({Text(feature), Num(t.statistic), Int(2), Num(t.p_value),
                                Text(SignificanceStars(t.p_value)), Int(static_cast<long long>(t.n)),
                                Num(Mean(groups[0])), Num(Mean(groups[1])), Num(Mean(groups[2]))});
        } catch (const Error& e) {
          throw Error(e.kind(), Context(fmt::format("kruskal-wallis {} {}", SurveyName(s), feature), e));
        }
      }
      family.tables.push_back(std::move(table));
    }
    return family;
  }

  SurveyIndex index_;
  const ReportOptions& options_;
};

std::string FormatCell(const ReportValue& v) {
  struct Visitor {
    std::string operator()(std::monostate) const { return "-"; }
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(long long i) const { return std::to_string(i); }
    std::string operator()(double x) const {
      if (!std::isfinite(x)) return x > 0 ? "inf" : (x < 0 ? "-inf" : "nan");
      if (x != 0.0 && std::abs(x) < 1e-4) return fmt::format("{:.3e}", x);
      return fmt::format("{:.4f}", x);
    }
  };
  return std::visit(Visitor{}, v);
}

}  // namespace

const ReportFamily* ReportBundle::Find(std::string_view name) const {
  for (const ReportFamily& f : families) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

ReportBundle BuildReports(std::span<const SurveyRecord> records, const ReportOptions& options) {
  return Builder(records, options).Build();
}

std::string RenderJson(const ReportFamily& family) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["family"] = family.name;
  doc["tables"] = ordered_json::array();
  for (const ReportTable& t : family.tables) {
    ordered_json table;
    table["title"] = t.title;
    table["columns"] = t.columns;
    table["rows"] = ordered_json::array();
    for (const Row& row : t.rows) {
      ordered_json obj = ordered_json::object();
      for (std::size_t i = 0; i < row.size(); ++i) {
        std::visit(
            [&](const auto& v) {
              using T = std::decay_t<decltype(v)>;
              if constexpr (std::is_same_v<T, std::monostate>) {
                obj[t.columns[i]] = nullptr;
              } else if constexpr (std::is_same_v<T, double>) {
                obj[t.columns[i]] = std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr);
              } else {
                obj[t.columns[i]] = v;
              }
            },
            row[i]);
      }
      table["rows"].push_back(std::move(obj));
    }
    doc["tables"].push_back(std::move(table));
  }
  return doc.dump(2) + "\n";
}

std::string RenderText(const ReportFamily& family) {
  std::string out;
  for (const ReportTable& t : family.tables) {
    std::vector<std::vector<std::string>> cells;
    cells.push_back(t.columns);
    for (const Row& row : t.rows) {
      std::vector<std::string> line;
      for (const ReportValue& v : row) line.push_back(FormatCell(v));
      cells.push_back(std::move(line));
    }
    std::vector<std::size_t> width(t.columns.size(), 0);
    for (const auto& line : cells) {
      for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
    }
    out += t.title + "\n";
    for (std::size_t r = 0; r < cells.size(); ++r) {
      std::string text;
      for (std::size_t i = 0; i < cells[r].size(); ++i) {
        if (i > 0) text += "  ";
        text += fmt::format("{:<{}}", cells[r][i], width[i]);
      }
      while (!text.empty() && text.back() == ' ') text.pop_back();
      out += text + "\n";
      if (r == 0) {
        std::size_t total = 0;
        for (std::size_t w : width) total += w;
        out += std::string(total + 2 * (width.size() - 1), '-') + "\n";
      }
    }
    if (t.rows.empty()) out += "(none)\n";
    out += "\n";
  }
  return out;
}

void WriteReports(const ReportBundle& bundle, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorKind::kSinkWriteFailure, "cannot create " + dir.string());
  for (const ReportFamily& family : bundle.families) {
    for (const auto& [ext, text] : {std::pair{".json", RenderJson(family)},
                                    std::pair{".txt", RenderText(family)}}) {
      const auto path = dir / (family.name + ext);
      std::ofstream f(path, std::ios::binary);
      f << text;
      if (!f) throw Error(ErrorKind::kSinkWriteFailure, "cannot write " + path.string());
    }
  }
}

}  // namespace tailors
