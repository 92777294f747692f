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

#ifndef NEGAFFECT_AFFECT_HPP_
#define NEGAFFECT_AFFECT_HPP_

#include <array>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "negaffect/corpus.hpp"

namespace negaffect::affect {

inline constexpr std::size_t kNumEmoticonCategories = 4;
inline constexpr std::size_t kNumLexiconCategories = 4;
inline constexpr std::size_t kNumContextualLabels = 6;

enum class EmoticonCategory { kJoy, kSadness, kAnger, kSurprise };
enum class LexiconCategory { kPositiveEmotions, kSadness, kAnger, kAnxiety };
enum class ContextualLabel { kJoy, kLove, kSadness, kFear, kAnger, kSurprise };

inline constexpr std::array<std::string_view, kNumEmoticonCategories>
    kEmoticonCategoryNames{"Joy", "Sadness", "Anger", "Surprise"};
inline constexpr std::array<std::string_view, kNumLexiconCategories>
    kLexiconCategoryNames{"PositiveEmotions", "Sadness", "Anger", "Anxiety"};
inline constexpr std::array<std::string_view, kNumContextualLabels>
    kContextualLabelNames{"Joy", "Love", "Sadness", "Fear", "Anger",
                          "Surprise"};
// Keys used by the scorer's JSONL files.
inline constexpr std::array<std::string_view, kNumContextualLabels>
    kContextualScoreKeys{"joy", "love", "sadness", "fear", "anger",
                         "surprise"};

using EmoticonCounts = std::array<int, kNumEmoticonCategories>;
using LexiconCounts = std::array<int, kNumLexiconCategories>;
using ContextualSums = std::array<double, kNumContextualLabels>;

// Shorthand strings (":)", "🙂", ...) mapped to emoticon categories.
class EmoticonConfig {
 public:
  // {"shorthands": {":)": "Joy", ...}}
  static EmoticonConfig FromJsonText(std::string_view text);
  static EmoticonConfig Load(const std::filesystem::path& path);

  // Throws ValidationError on a duplicate or empty shorthand.
  void Add(std::string shorthand, EmoticonCategory category);

  std::optional<EmoticonCategory> CategoryOf(std::string_view token) const;

  // Length of the longest shorthand starting at text[pos], or 0. A
  // shorthand that begins or ends with an ASCII letter or digit must not be
  // glued to another letter or digit on that side.
  std::size_t MatchAt(std::string_view text, std::size_t pos) const;

  const std::vector<std::pair<std::string, EmoticonCategory>>& entries() const {
    return entries_;
  }

 private:
  std::vector<std::pair<std::string, EmoticonCategory>> entries_;
  std::unordered_map<std::string, EmoticonCategory> by_token_;
};

// Lowercased tokens with punctuation split off and clitics ("n't", "'s",
// "'ll", ...) separated. Shorthands in `emoticons` survive as single tokens.
std::vector<std::string> Tokenize(std::string_view text,
                                  const EmoticonConfig* emoticons = nullptr);

// Per-category emoticon occurrences in one text.
EmoticonCounts CountEmoticonsInText(std::string_view text,
                                    const EmoticonConfig& cfg);
EmoticonCounts CountEmoticons(const corpus::Dialogue& d, int agent,
                              const EmoticonConfig& cfg);

// Removes every configured shorthand and collapses whitespace. Text without
// shorthands is returned unchanged.
std::string StripEmoticons(std::string_view text, const EmoticonConfig& cfg);

// Word lists per category. A pattern is an exact lowercase token or a stem
// ending in '*'.
class Lexicon {
 public:
  // Section headers "#category:<Name>", one pattern per line. Other lines
  // starting with '#' and blank lines are ignored.
  static Lexicon FromText(std::string_view text);
  static Lexicon Load(const std::filesystem::path& path);

  void AddPattern(LexiconCategory category, std::string_view pattern);

  // Which categories `token` matches; categories may overlap.
  std::array<bool, kNumLexiconCategories> Match(std::string_view token) const;

  // Occurrence counts over `tokens`, skipping emoticon tokens.
  LexiconCounts Count(const std::vector<std::string>& tokens,
                      const EmoticonConfig* emoticons = nullptr) const;

  std::size_t pattern_count() const;

 private:
  struct Category {
    std::unordered_set<std::string> exact;
    std::unordered_set<std::string> stems;
    std::size_t max_stem = 0;
  };
  std::array<Category, kNumLexiconCategories> categories_;
};

LexiconCounts CountLexicon(const corpus::Dialogue& d, int agent,
                           const Lexicon& lex,
                           const EmoticonConfig* emoticons = nullptr);

struct ScoreVector {
  std::array<double, kNumContextualLabels> values{};
  // Set when the utterance had no text left after emoticon removal; values
  // are then all zero.
  bool empty_flag = false;

  friend bool operator==(const ScoreVector&, const ScoreVector&) = default;
};

class ContextualScores {
 public:
  void Set(std::string utterance_id, ScoreVector v);
  const ScoreVector& At(std::string_view utterance_id) const;
  bool Contains(std::string_view utterance_id) const;
  std::size_t size() const { return by_id_.size(); }

  const std::string& model_id() const { return model_id_; }
  void set_model_id(std::string id) { model_id_ = std::move(id); }

  // Utterance ids in sorted order.
  std::vector<std::string> Ids() const;

  friend bool operator==(const ContextualScores&,
                         const ContextualScores&) = default;

 private:
  std::unordered_map<std::string, ScoreVector> by_id_;
  std::string model_id_;
};

// Reads a scorer output file (JSONL: utterance_id, scores{joy..surprise},
// model_id, optional empty_flag). Every utterance of `corpus` must be
// covered, except utterances that are empty after emoticon stripping; those
// get a zero vector with empty_flag set. Records for ids outside the corpus
// are ignored.
ContextualScores ParseContextualScores(std::istream& in,
                                       const corpus::Corpus& corpus,
                                       const EmoticonConfig& emoticons);
ContextualScores LoadContextualScores(const std::filesystem::path& path,
                                      const corpus::Corpus& corpus,
                                      const EmoticonConfig& emoticons);
void WriteContextualScores(const ContextualScores& scores, std::ostream& out);

// Scorer input: one {"utterance_id", "text"} line per utterance, text with
// emoticons stripped.
void WriteScorerInput(const corpus::Corpus& corpus,
                      const EmoticonConfig& emoticons, std::ostream& out);

ContextualSums AggregateContextual(const ContextualScores& scores,
                                   const corpus::Dialogue& d, int agent);

struct AffectProfile {
  std::string dialogue_id;
  int agent = 0;
  std::string participant_id;
  EmoticonCounts emoticon{};
  LexiconCounts lexicon{};
  ContextualSums contextual{};
  bool has_contextual = false;

  friend bool operator==(const AffectProfile&, const AffectProfile&) = default;
};

// One profile per participant-in-dialogue, sorted by (dialogue_id, agent).
// Without scores the contextual sums stay zero and has_contextual is false.
std::vector<AffectProfile> BuildProfiles(const corpus::Corpus& corpus,
                                         const EmoticonConfig& emoticons,
                                         const Lexicon& lexicon,
                                         const ContextualScores* scores);

// Utterance-level usage rates over the whole corpus.
struct Prevalence {
  std::size_t utterances = 0;
  std::size_t with_emoticon = 0;
  std::size_t with_joy_emoticon = 0;
  std::size_t with_emotive_word = 0;

  double emoticon_rate() const;
  // Among utterances with an emoticon.
  double joy_share() const;
  double emotive_word_rate() const;
};

Prevalence ComputePrevalence(const corpus::Corpus& corpus,
                             const EmoticonConfig& emoticons,
                             const Lexicon& lexicon);

}  // namespace negaffect::affect

#endif  // NEGAFFECT_AFFECT_HPP_
