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
#include <tuple>

#include "negaffect/affect.hpp"

namespace negaffect::affect {

std::vector<AffectProfile> BuildProfiles(const corpus::Corpus& corpus,
                                         const EmoticonConfig& emoticons,
                                         const Lexicon& lexicon,
                                         const ContextualScores* scores) {
  std::vector<AffectProfile> profiles;
  profiles.reserve(corpus.dialogues.size() * 2);
  for (const auto& d : corpus.dialogues) {
    for (int agent = 0; agent < 2; ++agent) {
      AffectProfile p;
      p.dialogue_id = d.dialogue_id;
      p.agent = agent;
      p.participant_id = d.participants[agent].participant_id;
      p.emoticon = CountEmoticons(d, agent, emoticons);
      p.lexicon = CountLexicon(d, agent, lexicon, &emoticons);
      if (scores != nullptr) {
        p.contextual = AggregateContextual(*scores, d, agent);
        p.has_contextual = true;
      }
      profiles.push_back(std::move(p));
    }
  }
  std::sort(profiles.begin(), profiles.end(),
            [](const AffectProfile& a, const AffectProfile& b) {
              return std::tie(a.dialogue_id, a.agent) <
                     std::tie(b.dialogue_id, b.agent);
            });
  return profiles;
}

double Prevalence::emoticon_rate() const {
  return utterances == 0 ? 0.0
                         : static_cast<double>(with_emoticon) / utterances;
}

double Prevalence::joy_share() const {
  return with_emoticon == 0
             ? 0.0
             : static_cast<double>(with_joy_emoticon) / with_emoticon;
}

double Prevalence::emotive_word_rate() const {
  return utterances == 0 ? 0.0
                         : static_cast<double>(with_emotive_word) / utterances;
}

Prevalence ComputePrevalence(const corpus::Corpus& corpus,
                             const EmoticonConfig& emoticons,
                             const Lexicon& lexicon) {
  Prevalence p;
  for (const auto& d : corpus.dialogues) {
    for (const auto& u : d.utterances) {
      ++p.utterances;
      const auto tokens = Tokenize(u.text, &emoticons);
      EmoticonCounts emo{};
      for (const auto& t : tokens) {
        if (auto cat = emoticons.CategoryOf(t)) ++emo[static_cast<int>(*cat)];
      }
      const int total_emo = emo[0] + emo[1] + emo[2] + emo[3];
      if (total_emo > 0) ++p.with_emoticon;
      if (emo[static_cast<int>(EmoticonCategory::kJoy)] > 0) {
        ++p.with_joy_emoticon;
      }
      const auto lex = lexicon.Count(tokens, &emoticons);
      if (lex[0] + lex[1] + lex[2] + lex[3] > 0) ++p.with_emotive_word;
    }
  }
  return p;
}

}  // namespace negaffect::affect
