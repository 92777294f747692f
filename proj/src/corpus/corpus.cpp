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
#include <set>
#include <string>
#include <unordered_set>

#include "negaffect/corpus.hpp"

namespace negaffect::corpus {
namespace {

template <typename E>
std::optional<E> Lookup(const std::vector<std::string>& names,
                        std::string_view s) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == s) return static_cast<E>(i);
  }
  return std::nullopt;
}

bool IsBlank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
           c == '\v';
  });
}

[[noreturn]] void Fail(const Dialogue& d, const std::string& what) {
  throw ValidationError("dialogue " + d.dialogue_id + ": " + what);
}

void CheckRange(const Dialogue& d, const std::string& field,
                const Field<int>& v, int lo, int hi) {
  if (!v.present()) return;
  if (v.value() < lo || v.value() > hi) {
    Fail(d, field + " = " + std::to_string(v.value()) + " out of range [" +
                std::to_string(lo) + "," + std::to_string(hi) + "]");
  }
}

void CheckRange(const Dialogue& d, const std::string& field,
                const Field<double>& v, double lo, double hi) {
  if (!v.present()) return;
  if (!(v.value() >= lo && v.value() <= hi)) {
    Fail(d, field + " = " + std::to_string(v.value()) + " out of range [" +
                std::to_string(lo) + "," + std::to_string(hi) + "]");
  }
}

}  // namespace

const std::vector<std::string>& GenderLevels() {
  static const std::vector<std::string> kNames{"Female", "Male", "Other"};
  return kNames;
}

const std::vector<std::string>& EthnicityLevels() {
  static const std::vector<std::string> kNames{
      "White American",           "Native or Islander",
      "Asian American",           "Black or African American",
      "Hispanic or Latino",       "Other"};
  return kNames;
}

const std::vector<std::string>& SvoLevels() {
  static const std::vector<std::string> kNames{"Prosocial", "Proself",
                                               "Unclassified"};
  return kNames;
}

namespace {
const std::vector<std::string>& IssueNames() {
  static const std::vector<std::string> kNames{"Food", "Water", "Firewood"};
  return kNames;
}
const std::vector<std::string>& PriorityNames() {
  static const std::vector<std::string> kNames{"High", "Medium", "Low"};
  return kNames;
}
}  // namespace

std::string_view Name(Gender g) { return GenderLevels()[static_cast<int>(g)]; }
std::string_view Name(Ethnicity e) {
  return EthnicityLevels()[static_cast<int>(e)];
}
std::string_view Name(Svo s) { return SvoLevels()[static_cast<int>(s)]; }
std::string_view Name(Issue i) { return IssueNames()[static_cast<int>(i)]; }
std::string_view Name(PriorityLevel p) {
  return PriorityNames()[static_cast<int>(p)];
}

std::optional<Gender> ParseGender(std::string_view s) {
  return Lookup<Gender>(GenderLevels(), s);
}
std::optional<Ethnicity> ParseEthnicity(std::string_view s) {
  return Lookup<Ethnicity>(EthnicityLevels(), s);
}
std::optional<Svo> ParseSvo(std::string_view s) {
  return Lookup<Svo>(SvoLevels(), s);
}
std::optional<PriorityLevel> ParsePriorityLevel(std::string_view s) {
  return Lookup<PriorityLevel>(PriorityNames(), s);
}
std::optional<Issue> ParseIssue(std::string_view s) {
  return Lookup<Issue>(IssueNames(), s);
}

void Validate(const Dialogue& d) {
  if (d.dialogue_id.empty()) throw ValidationError("dialogue with empty id");
  int last_turn = -1;
  for (const auto& u : d.utterances) {
    if (u.id.empty()) Fail(d, "utterance with empty id");
    if (u.speaker != 0 && u.speaker != 1) {
      Fail(d, "utterance " + u.id + ": speaker = " +
                  std::to_string(u.speaker) + " not in {0,1}");
    }
    if (IsBlank(u.text)) Fail(d, "utterance " + u.id + ": text is empty");
    if (u.turn_index <= last_turn) {
      Fail(d, "utterance " + u.id + ": turn_index " +
                  std::to_string(u.turn_index) + " not increasing");
    }
    last_turn = u.turn_index;
  }
  for (int a = 0; a < 2; ++a) {
    const auto& p = d.participants[a];
    const std::string prefix = "participants[" + std::to_string(a) + "].";
    if (p.participant_id.empty()) Fail(d, prefix + "participant_id is empty");
    if (p.age.present() && p.age.value() <= 0) {
      Fail(d, prefix + "age = " + std::to_string(p.age.value()) +
                  " must be positive");
    }
    CheckRange(d, prefix + "education", p.education, 0, 8);
    CheckRange(d, prefix + "satisfaction", p.satisfaction, 1, 5);
    CheckRange(d, prefix + "likeness", p.likeness, 1, 5);
    CheckRange(d, prefix + "big5.extraversion", p.big5.extraversion, 1, 7);
    CheckRange(d, prefix + "big5.agreeableness", p.big5.agreeableness, 1, 7);
    CheckRange(d, prefix + "big5.conscientiousness", p.big5.conscientiousness,
               1, 7);
    CheckRange(d, prefix + "big5.emotional_stability",
               p.big5.emotional_stability, 1, 7);
    CheckRange(d, prefix + "big5.openness", p.big5.openness, 1, 7);
    std::set<PriorityLevel> seen(p.priorities.begin(), p.priorities.end());
    if (seen.size() != 3) {
      Fail(d, prefix + "priorities is not a permutation of High/Medium/Low");
    }
  }
}

void Validate(const Corpus& c) {
  std::unordered_set<std::string> dialogue_ids;
  std::unordered_set<std::string> utterance_ids;
  for (const auto& d : c.dialogues) {
    Validate(d);
    if (!dialogue_ids.insert(d.dialogue_id).second) {
      throw ValidationError("duplicate dialogue_id " + d.dialogue_id);
    }
    for (const auto& u : d.utterances) {
      if (!utterance_ids.insert(u.id).second) {
        Fail(d, "duplicate utterance id " + u.id);
      }
    }
  }
}

std::vector<const Utterance*> UtterancesOf(const Dialogue& d, int agent) {
  std::vector<const Utterance*> out;
  for (const auto& u : d.utterances) {
    if (u.speaker == agent) out.push_back(&u);
  }
  return out;
}

}  // namespace negaffect::corpus
