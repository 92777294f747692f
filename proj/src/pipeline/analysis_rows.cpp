// Copyright 2026 The negaffect Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cctype>
#include <map>

#include "negaffect/pipeline.hpp"

namespace negaffect::pipeline {
namespace {

// "PositiveEmotions" -> "positive_emotions".
std::string SnakeCase(std::string_view name) {
  std::string out;
  for (char ch : name) {
    const auto c = static_cast<unsigned char>(ch);
    if (std::isupper(c)) {
      if (!out.empty()) out += '_';
      out += static_cast<char>(std::tolower(c));
    } else {
      out += ch;
    }
  }
  return out;
}

constexpr std::array<const char*, 3> kCategoricalOrder{"gender", "ethnicity",
                                                       "svo"};

std::optional<std::string> LevelOf(const corpus::ParticipantRecord& p,
                                   std::string_view var) {
  if (var == "gender") {
    if (!p.gender.present()) return std::nullopt;
    return std::string(corpus::Name(p.gender.value()));
  }
  if (var == "ethnicity") {
    if (!p.ethnicity.present()) return std::nullopt;
    return std::string(corpus::Name(p.ethnicity.value()));
  }
  if (!p.svo.present()) return std::nullopt;
  return std::string(corpus::Name(p.svo.value()));
}

const std::vector<std::string>& AllLevels(std::string_view var) {
  if (var == "gender") return corpus::GenderLevels();
  if (var == "ethnicity") return corpus::EthnicityLevels();
  return corpus::SvoLevels();
}

template <typename T>
std::optional<double> Num(const Field<T>& f) {
  if (!f.present()) return std::nullopt;
  return static_cast<double>(f.value());
}

}  // namespace

std::vector<std::string> AffectColumns(lexcorr::Method method,
                                       std::string_view who) {
  std::vector<std::string> cols;
  for (const auto& cat : lexcorr::CategoryNames(method)) {
    cols.push_back(std::string(who) + "." +
                   std::string(lexcorr::MethodName(method)) + "." +
                   SnakeCase(cat));
  }
  return cols;
}

std::vector<std::string> AllAffectColumns(std::string_view who) {
  std::vector<std::string> cols;
  for (auto m : lexcorr::kAllMethods) {
    auto part = AffectColumns(m, who);
    cols.insert(cols.end(), part.begin(), part.end());
  }
  return cols;
}

Encoding BuildEncoding(
    const corpus::Corpus& corpus,
    const std::map<std::string, CategoricalOverride>& overrides) {
  Encoding enc;
  for (const char* var : kCategoricalOrder) {
    std::vector<std::optional<std::string>> values;
    for (const auto& d : corpus.dialogues) {
      for (const auto& p : d.participants) values.push_back(LevelOf(p, var));
    }
    CategoricalSpec spec;
    const auto it = overrides.find(var);
    if (it != overrides.end() && !it->second.levels.empty()) {
      spec.levels = it->second.levels;
    } else {
      for (const auto& level : AllLevels(var)) {
        if (std::find(values.begin(), values.end(), level) != values.end()) {
          spec.levels.push_back(level);
        }
      }
    }
    if (it != overrides.end() && !it->second.reference.empty()) {
      spec.reference = it->second.reference;
      if (std::find(spec.levels.begin(), spec.levels.end(), spec.reference) ==
          spec.levels.end()) {
        throw ValidationError(std::string(var) + ": reference level \"" +
                              spec.reference + "\" is not among the levels");
      }
    } else if (!spec.levels.empty()) {
      spec.reference = stats::MostFrequentLevel(values, spec.levels);
    }
    enc[var] = std::move(spec);
  }
  return enc;
}

std::vector<std::string> ExpandBlock(const std::vector<std::string>& names,
                                     const Encoding& encoding) {
  std::vector<std::string> out;
  for (const auto& name : names) {
    const auto it = encoding.find(name);
    if (it == encoding.end()) {
      out.push_back(name);
      continue;
    }
    for (const auto& level : it->second.levels) {
      if (level != it->second.reference) out.push_back(name + "=" + level);
    }
  }
  return out;
}

std::vector<std::vector<std::string>> RegressionBlocks(
    const std::vector<std::string>& individual_block, const Encoding& encoding,
    lexcorr::Method method) {
  return {ExpandBlock(individual_block, encoding),
          AffectColumns(method, "self"), AffectColumns(method, "partner")};
}

stats::AnalysisTable BuildAnalysisTable(
    const corpus::Corpus& corpus,
    const std::vector<affect::AffectProfile>& profiles,
    const Encoding& encoding) {
  stats::AnalysisTable table;
  table.columns = {"age",           "education",         "extraversion",
                   "agreeableness", "conscientiousness", "emotional_stability",
                   "openness",      "points",            "partner.points"};
  for (const char* var : kCategoricalOrder) {
    for (const auto& col : ExpandBlock({var}, encoding)) {
      table.columns.push_back(col);
    }
  }
  const auto self_cols = AllAffectColumns("self");
  const auto partner_cols = AllAffectColumns("partner");
  table.columns.insert(table.columns.end(), self_cols.begin(), self_cols.end());
  table.columns.insert(table.columns.end(), partner_cols.begin(),
                       partner_cols.end());
  table.columns.push_back("satisfaction");
  table.columns.push_back("likeness");

  std::map<std::pair<std::string, int>, const affect::AffectProfile*> by_key;
  for (const auto& p : profiles) by_key[{p.dialogue_id, p.agent}] = &p;
  auto profile_of = [&](const std::string& id, int agent) {
    const auto it = by_key.find({id, agent});
    if (it == by_key.end()) {
      throw ValidationError("analysis rows: no affect profile for dialogue " +
                            id + " agent " + std::to_string(agent));
    }
    return it->second;
  };
  auto append_affect = [](std::vector<std::optional<double>>& row,
                          const affect::AffectProfile& p) {
    for (int v : p.emoticon) row.emplace_back(v);
    for (int v : p.lexicon) row.emplace_back(v);
    for (double v : p.contextual) {
      row.push_back(p.has_contextual ? std::optional<double>(v) : std::nullopt);
    }
  };

  std::vector<const corpus::Dialogue*> dialogues;
  for (const auto& d : corpus.dialogues) dialogues.push_back(&d);
  std::sort(dialogues.begin(), dialogues.end(),
            [](const auto* a, const auto* b) {
              return a->dialogue_id < b->dialogue_id;
            });

  for (const auto* d : dialogues) {
    for (int agent = 0; agent < 2; ++agent) {
      const auto& p = d->participants[agent];
      std::vector<std::optional<double>> row{
          Num(p.age),
          Num(p.education),
          Num(p.big5.extraversion),
          Num(p.big5.agreeableness),
          Num(p.big5.conscientiousness),
          Num(p.big5.emotional_stability),
          Num(p.big5.openness),
          Num(p.points),
          Num(d->participants[1 - agent].points)};
      for (const char* var : kCategoricalOrder) {
        const auto& spec = encoding.at(var);
        if (spec.levels.empty()) continue;
        const auto coded =
            stats::DummyCode({LevelOf(p, var)}, spec.levels, spec.reference);
        if (coded.rows[0]) {
          for (double v : *coded.rows[0]) row.emplace_back(v);
        } else {
          row.insert(row.end(), coded.column_levels.size(), std::nullopt);
        }
      }
      append_affect(row, *profile_of(d->dialogue_id, agent));
      append_affect(row, *profile_of(d->dialogue_id, 1 - agent));
      row.push_back(Num(p.satisfaction));
      row.push_back(Num(p.likeness));
      table.ids.push_back({d->dialogue_id, agent});
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

}  // namespace negaffect::pipeline
