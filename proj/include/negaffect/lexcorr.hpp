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

#ifndef NEGAFFECT_LEXCORR_HPP_
#define NEGAFFECT_LEXCORR_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "negaffect/affect.hpp"
#include "negaffect/corpus.hpp"

namespace negaffect::lexcorr {

enum class Method { kEmoticon, kLexicon, kContextual };

inline constexpr std::array<Method, 3> kAllMethods{
    Method::kEmoticon, Method::kLexicon, Method::kContextual};

std::string_view MethodName(Method m);
std::optional<Method> ParseMethod(std::string_view s);
// The method's category inventory, e.g. Joy..Surprise for emoticons.
const std::vector<std::string>& CategoryNames(Method m);

// How to label an utterance whose top count is shared by several
// categories.
struct TiePolicy {
  enum class Kind { kDrop, kPriority };
  Kind kind = Kind::kDrop;
  // Category names, highest priority first. Tied categories not listed rank
  // after listed ones, in inventory order.
  std::vector<std::string> order;

  // "drop" or "priority:Joy>Sadness>Anger>Surprise".
  static TiePolicy Parse(std::string_view text);
  std::string ToString() const;
};

// Index of the single largest count, or, when several share it, the
// policy's choice. nullopt when every count is zero or the tie is dropped.
std::optional<int> ResolveTie(std::span<const double> counts,
                              const std::vector<std::string>& categories,
                              const TiePolicy& policy);

struct AffectInputs {
  const affect::EmoticonConfig* emoticons = nullptr;
  const affect::Lexicon* lexicon = nullptr;
  const affect::ContextualScores* scores = nullptr;
};

struct LabeledUtterance {
  std::string utterance_id;
  Method method = Method::kEmoticon;
  std::optional<int> label;  // index into CategoryNames(method)
  double confidence = 0.0;   // contextual only: score of the label
  int signal_count = 0;      // emoticons / emotive words present
  bool tied = false;

  // No emoticon or emotive word at all (independent of tie handling).
  bool undetected() const { return signal_count == 0; }
  std::string LabelName() const;
};

// Emoticon/lexicon: the category with the largest count among present
// signals. Contextual: argmax of the six confidences; an all-zero vector
// (emoticon-only utterance) stays unlabeled.
LabeledUtterance LabelUtterance(const corpus::Utterance& u, Method method,
                                const AffectInputs& inputs,
                                const TiePolicy& policy);

struct Labeling {
  Method method = Method::kEmoticon;
  std::vector<LabeledUtterance> labels;  // corpus order
  std::size_t ties = 0;
  std::size_t unlabeled = 0;
};

Labeling LabelCorpus(const corpus::Corpus& corpus, Method method,
                     const AffectInputs& inputs, const TiePolicy& policy);

// Token counts per category over labeled utterances. Emoticon shorthands
// and punctuation-only tokens are not counted; unlabeled utterances are
// left out entirely.
struct TokenStats {
  std::vector<std::string> categories;
  // token -> count per category
  std::map<std::string, std::vector<double>> counts;
  std::vector<double> totals;  // n_c
  // Prior counts y_0(w) and their total n_0.
  std::map<std::string, double> background;
  double background_total = 0.0;

  // Background is the pooled labeled corpus.
  static TokenStats Build(const corpus::Corpus& corpus,
                          const Labeling& labeling,
                          const affect::EmoticonConfig* emoticons);
};

struct LogOddsEntry {
  std::string token;
  std::string category;
  double delta = 0.0;
  double variance = 0.0;
  double z = 0.0;
  double p = 1.0;  // two-tailed normal
};

// Log-odds of one token in group i versus group j with prior
// alpha_w = alpha0 * y0 / n0.
LogOddsEntry LogOddsForToken(double y_i, double n_i, double y_j, double n_j,
                             double y0, double n0, double alpha0);

// Category `category` against the union of all other categories. Tokens
// with a background count below `min_count` are skipped. Sorted by z
// descending, then token. Throws ValidationError when a counted token has no
// background count or alpha0 <= 0.
std::vector<LogOddsEntry> LogOddsDirichlet(const TokenStats& stats,
                                           std::size_t category, double alpha0,
                                           double min_count = 0.0);

// First k entries by z descending; equal z ordered by token.
std::vector<LogOddsEntry> TopKCorrelates(std::vector<LogOddsEntry> entries,
                                         std::size_t k);

struct Sample {
  std::string utterance_id;
  std::string dialogue_id;
  std::string text;
  double confidence = 0.0;
};

// Utterances whose contextual prediction is `category`, restricted to those
// that every method in `undetected_by` found no signal in, ranked by
// confidence (ties by utterance id).
std::vector<Sample> TopConfidentSamples(
    const corpus::Corpus& corpus, const std::map<Method, Labeling>& labelings,
    int category, std::size_t k,
    const std::vector<Method>& undetected_by = {Method::kEmoticon,
                                                Method::kLexicon});

}  // namespace negaffect::lexcorr

#endif  // NEGAFFECT_LEXCORR_HPP_
