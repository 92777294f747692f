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

#include <fstream>
#include <functional>
#include <sstream>

#include "json.hpp"
#include "negaffect/corpus.hpp"

namespace negaffect::corpus {
namespace {

using nlohmann::json;

bool Compare(double lhs, CompareOp op, double rhs) {
  switch (op) {
    case CompareOp::kLt: return lhs < rhs;
    case CompareOp::kLe: return lhs <= rhs;
    case CompareOp::kGt: return lhs > rhs;
    case CompareOp::kGe: return lhs >= rhs;
    case CompareOp::kEq: return lhs == rhs;
    case CompareOp::kNe: return lhs != rhs;
  }
  return false;
}

std::optional<CompareOp> ParseOp(std::string_view s) {
  if (s == "<") return CompareOp::kLt;
  if (s == "<=") return CompareOp::kLe;
  if (s == ">") return CompareOp::kGt;
  if (s == ">=") return CompareOp::kGe;
  if (s == "==") return CompareOp::kEq;
  if (s == "!=") return CompareOp::kNe;
  return std::nullopt;
}

std::string FormatNumber(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// Applies `rule` to one field. Returns the reported value when excluded.
template <typename T>
std::optional<std::string> ApplyNumeric(Field<T>& f, const ExclusionRule& r) {
  if (!f.present()) return std::nullopt;
  if (!Compare(static_cast<double>(f.value()), r.op, r.number)) {
    return std::nullopt;
  }
  f.Exclude();
  return FormatNumber(static_cast<double>(f.raw()));
}

template <typename E>
std::optional<std::string> ApplyLevel(Field<E>& f, const ExclusionRule& r) {
  if (!f.present()) return std::nullopt;
  const std::string_view name = Name(f.value());
  const bool match = r.op == CompareOp::kEq   ? name == r.level
                     : r.op == CompareOp::kNe ? name != r.level
                                              : false;
  if (!match) return std::nullopt;
  f.Exclude();
  return std::string(name);
}

bool IsCategorical(std::string_view v) {
  return v == "gender" || v == "ethnicity" || v == "svo";
}

std::optional<std::string> ApplyRule(ParticipantRecord& p,
                                     const ExclusionRule& r) {
  const std::string& v = r.variable;
  if (v == "age") return ApplyNumeric(p.age, r);
  if (v == "education") return ApplyNumeric(p.education, r);
  if (v == "satisfaction") return ApplyNumeric(p.satisfaction, r);
  if (v == "likeness") return ApplyNumeric(p.likeness, r);
  if (v == "points") return ApplyNumeric(p.points, r);
  if (v == "extraversion") return ApplyNumeric(p.big5.extraversion, r);
  if (v == "agreeableness") return ApplyNumeric(p.big5.agreeableness, r);
  if (v == "conscientiousness")
    return ApplyNumeric(p.big5.conscientiousness, r);
  if (v == "emotional_stability")
    return ApplyNumeric(p.big5.emotional_stability, r);
  if (v == "openness") return ApplyNumeric(p.big5.openness, r);
  if (v == "gender") return ApplyLevel(p.gender, r);
  if (v == "ethnicity") return ApplyLevel(p.ethnicity, r);
  if (v == "svo") return ApplyLevel(p.svo, r);
  throw ValidationError("exclusion rule: unknown variable \"" + v + "\"");
}

}  // namespace

ExclusionPolicy ExclusionPolicy::Default() {
  ExclusionRule age;
  age.variable = "age";
  age.op = CompareOp::kLe;
  age.number = 17;
  age.reason = "implausible age";
  return ExclusionPolicy{{age}};
}

ExclusionPolicy ExclusionPolicy::FromJsonText(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("exclusion policy: malformed JSON: ") +
                          e.what());
  }
  if (!root.is_object() || !root.contains("rules") ||
      !root["rules"].is_array()) {
    throw ValidationError("exclusion policy: expected {\"rules\": [...]}");
  }
  ExclusionPolicy policy;
  std::size_t i = 0;
  for (const auto& rj : root["rules"]) {
    const std::string at = "exclusion policy rules[" + std::to_string(i++) + "]";
    if (!rj.is_object() || !rj.contains("variable") || !rj.contains("op") ||
        !rj.contains("value")) {
      throw ValidationError(at + ": needs variable, op and value");
    }
    ExclusionRule r;
    r.variable = rj["variable"].get<std::string>();
    const auto op = ParseOp(rj["op"].get<std::string>());
    if (!op) throw ValidationError(at + ": unknown op " + rj["op"].dump());
    r.op = *op;
    if (IsCategorical(r.variable)) {
      if (!rj["value"].is_string()) {
        throw ValidationError(at + ": categorical value must be a string");
      }
      if (r.op != CompareOp::kEq && r.op != CompareOp::kNe) {
        throw ValidationError(at + ": categorical rules take == or !=");
      }
      r.level = rj["value"].get<std::string>();
    } else {
      if (!rj["value"].is_number()) {
        throw ValidationError(at + ": numeric value expected");
      }
      r.number = rj["value"].get<double>();
    }
    r.reason = rj.value("reason", "");
    // Reject unknown variables early.
    ParticipantRecord probe;
    ApplyRule(probe, r);
    policy.rules.push_back(std::move(r));
  }
  return policy;
}

ExclusionPolicy ExclusionPolicy::Load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open exclusion policy " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return FromJsonText(buf.str());
}

ExclusionResult ApplyExclusions(const Corpus& corpus,
                                const ExclusionPolicy& policy) {
  ExclusionResult result{corpus, {}};
  for (auto& d : result.corpus.dialogues) {
    for (int a = 0; a < 2; ++a) {
      auto& p = d.participants[a];
      for (const auto& rule : policy.rules) {
        if (auto value = ApplyRule(p, rule)) {
          result.report.push_back({d.dialogue_id, a, p.participant_id,
                                   rule.variable, *value, rule.reason});
        }
      }
    }
  }
  return result;
}

}  // namespace negaffect::corpus
