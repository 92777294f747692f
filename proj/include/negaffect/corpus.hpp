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

#ifndef NEGAFFECT_CORPUS_HPP_
#define NEGAFFECT_CORPUS_HPP_

#include <array>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "negaffect/common.hpp"

namespace negaffect::corpus {

enum class Gender { kFemale, kMale, kOther };
enum class Ethnicity {
  kWhiteAmerican,
  kNativeOrIslander,
  kAsianAmerican,
  kBlackOrAfricanAmerican,
  kHispanicOrLatino,
  kOther
};
enum class Svo { kProsocial, kProself, kUnclassified };
enum class Issue { kFood, kWater, kFirewood };
enum class PriorityLevel { kHigh, kMedium, kLow };

std::string_view Name(Gender g);
std::string_view Name(Ethnicity e);
std::string_view Name(Svo s);
std::string_view Name(Issue i);
std::string_view Name(PriorityLevel p);

// Parse the canonical level names ("Female", "Asian American", ...).
// Return nullopt on unknown input.
std::optional<Gender> ParseGender(std::string_view s);
std::optional<Ethnicity> ParseEthnicity(std::string_view s);
std::optional<Svo> ParseSvo(std::string_view s);
std::optional<PriorityLevel> ParsePriorityLevel(std::string_view s);
std::optional<Issue> ParseIssue(std::string_view s);

// All level names, in enum order.
const std::vector<std::string>& GenderLevels();
const std::vector<std::string>& EthnicityLevels();
const std::vector<std::string>& SvoLevels();

struct Utterance {
  std::string id;
  int speaker = 0;  // agent index, 0 or 1
  std::string text;
  int turn_index = 0;

  friend bool operator==(const Utterance&, const Utterance&) = default;
};

struct Big5 {
  Field<double> extraversion;
  Field<double> agreeableness;
  Field<double> conscientiousness;
  Field<double> emotional_stability;
  Field<double> openness;

  friend bool operator==(const Big5&, const Big5&) = default;
};

struct ParticipantRecord {
  std::string participant_id;
  Field<int> age;
  Field<int> education;  // ordinal 0..8
  Field<Gender> gender;
  Field<Ethnicity> ethnicity;
  Field<Svo> svo;
  Big5 big5;
  // Indexed by Issue.
  std::array<PriorityLevel, 3> priorities{PriorityLevel::kHigh,
                                          PriorityLevel::kMedium,
                                          PriorityLevel::kLow};
  Field<int> satisfaction;  // Likert 1..5
  Field<int> likeness;      // Likert 1..5
  // Objective negotiation score; optional control column.
  Field<double> points;

  friend bool operator==(const ParticipantRecord&,
                         const ParticipantRecord&) = default;
};

struct Dialogue {
  std::string dialogue_id;
  std::vector<Utterance> utterances;
  std::array<ParticipantRecord, 2> participants;

  friend bool operator==(const Dialogue&, const Dialogue&) = default;
};

inline constexpr std::string_view kSatisfactionQuestion =
    "How satisfied are you with the negotiation outcome?";
inline constexpr std::string_view kLikenessQuestion =
    "How much do you like your opponent?";

struct Provenance {
  std::string source_format;  // "canonical" or "release"
  std::string source_path;
  std::string ingested_at;  // ISO-8601 UTC
  std::string satisfaction_question{kSatisfactionQuestion};
  std::string likeness_question{kLikenessQuestion};
};

struct IngestReport {
  std::size_t dialogues = 0;
  std::size_t utterances = 0;
  std::size_t participant_rows = 0;
  std::size_t skipped_messages = 0;  // release adapter: deal actions, blanks
};

// Corpora compare equal on content and source format; the ingestion
// timestamp and path are not part of equality.
struct Corpus {
  std::vector<Dialogue> dialogues;
  Provenance provenance;
  IngestReport report;

  friend bool operator==(const Corpus& a, const Corpus& b) {
    return a.dialogues == b.dialogues &&
           a.provenance.source_format == b.provenance.source_format;
  }
};

// Checks every type invariant. Throws ValidationError naming the dialogue id
// and field of the first violation.
void Validate(const Dialogue& d);
void Validate(const Corpus& c);

// Canonical line-delimited format.
Corpus ParseCanonical(std::istream& in, std::string_view source_name);
Corpus IngestCanonical(const std::filesystem::path& path);
void WriteCanonical(const Corpus& corpus, std::ostream& out);
std::string ToCanonicalLine(const Dialogue& d);

// Public release format (a JSON array of dialogue objects with chat_logs
// and participant_info). See docs/release_format.md for the mapping.
Corpus ParseRelease(std::string_view json_text, std::string_view source_name);
Corpus IngestReleaseAdapter(const std::filesystem::path& path);

// Education strings of the release mapped to the 0..8 ordinal.
std::optional<int> EducationOrdinal(std::string_view release_value);

// ---- Exclusions ----

enum class CompareOp { kLt, kLe, kGt, kGe, kEq, kNe };

struct ExclusionRule {
  std::string variable;  // e.g. "age", "svo", "openness"
  CompareOp op = CompareOp::kEq;
  // Exactly one of these is used, by the variable's kind.
  double number = 0.0;
  std::string level;
  std::string reason;
};

struct ExclusionPolicy {
  std::vector<ExclusionRule> rules;

  // Age at or below 17 is treated as a data-entry error.
  static ExclusionPolicy Default();
  static ExclusionPolicy FromJsonText(std::string_view text);
  static ExclusionPolicy Load(const std::filesystem::path& path);
};

struct ExclusionEntry {
  std::string dialogue_id;
  int agent = 0;
  std::string participant_id;
  std::string variable;
  std::string value;
  std::string reason;
};

struct ExclusionResult {
  Corpus corpus;
  std::vector<ExclusionEntry> report;
};

// Marks matching values as excluded. Never drops dialogues or records.
ExclusionResult ApplyExclusions(const Corpus& corpus,
                                const ExclusionPolicy& policy);

// Utterances spoken by `agent`, in turn order.
std::vector<const Utterance*> UtterancesOf(const Dialogue& d, int agent);

}  // namespace negaffect::corpus

#endif  // NEGAFFECT_CORPUS_HPP_
