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

#include "negaffect/lexcorr.hpp"

namespace negaffect::lexcorr {
namespace {

std::vector<std::string> ToStrings(auto const& names) {
  return {names.begin(), names.end()};
}

}  // namespace

std::string_view MethodName(Method m) {
  switch (m) {
    case Method::kEmoticon: return "emoticon";
    case Method::kLexicon: return "lexicon";
    case Method::kContextual: return "contextual";
  }
  return "";
}

std::optional<Method> ParseMethod(std::string_view s) {
  for (Method m : kAllMethods) {
    if (MethodName(m) == s) return m;
  }
  return std::nullopt;
}

const std::vector<std::string>& CategoryNames(Method m) {
  static const auto kEmoticon = ToStrings(affect::kEmoticonCategoryNames);
  static const auto kLexicon = ToStrings(affect::kLexiconCategoryNames);
  static const auto kContextual = ToStrings(affect::kContextualLabelNames);
  switch (m) {
    case Method::kEmoticon: return kEmoticon;
    case Method::kLexicon: return kLexicon;
    case Method::kContextual: return kContextual;
  }
  return kEmoticon;
}

TiePolicy TiePolicy::Parse(std::string_view text) {
  TiePolicy p;
  if (text == "drop") return p;
  constexpr std::string_view kPrefix = "priority:";
  if (text.substr(0, kPrefix.size()) != kPrefix) {
    throw ValidationError("tie policy: expected \"drop\" or "
                          "\"priority:A>B>...\", got \"" +
                          std::string(text) + "\"");
  }
  p.kind = Kind::kPriority;
  std::string_view rest = text.substr(kPrefix.size());
  while (!rest.empty()) {
    const auto gt = rest.find('>');
    const std::string_view name = rest.substr(0, gt);
    if (name.empty()) throw ValidationError("tie policy: empty category name");
    p.order.emplace_back(name);
    if (gt == std::string_view::npos) break;
    rest = rest.substr(gt + 1);
  }
  if (p.order.empty()) throw ValidationError("tie policy: empty priority list");
  return p;
}

std::string TiePolicy::ToString() const {
  if (kind == Kind::kDrop) return "drop";
  std::string out = "priority:";
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0) out += '>';
    out += order[i];
  }
  return out;
}

std::optional<int> ResolveTie(std::span<const double> counts,
                              const std::vector<std::string>& categories,
                              const TiePolicy& policy) {
  if (counts.empty()) return std::nullopt;
  const double best = *std::max_element(counts.begin(), counts.end());
  if (!(best > 0.0)) return std::nullopt;
  std::vector<int> tied;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] == best) tied.push_back(static_cast<int>(i));
  }
  if (tied.size() == 1) return tied.front();
  if (policy.kind == TiePolicy::Kind::kDrop) return std::nullopt;
  auto rank = [&](int idx) {
    const auto it =
        std::find(policy.order.begin(), policy.order.end(), categories[idx]);
    return it == policy.order.end()
               ? policy.order.size() + static_cast<std::size_t>(idx)
               : static_cast<std::size_t>(it - policy.order.begin());
  };
  return *std::min_element(tied.begin(), tied.end(),
                           [&](int a, int b) { return rank(a) < rank(b); });
}

std::string LabeledUtterance::LabelName() const {
  return label ? CategoryNames(method)[*label] : std::string("Unlabeled");
}

LabeledUtterance LabelUtterance(const corpus::Utterance& u, Method method,
                                const AffectInputs& inputs,
                                const TiePolicy& policy) {
  LabeledUtterance out;
  out.utterance_id = u.id;
  out.method = method;
  std::vector<double> counts;
  switch (method) {
    case Method::kEmoticon: {
      if (inputs.emoticons == nullptr) {
        throw std::invalid_argument("emoticon labeling needs an emoticon config");
      }
      const auto c = affect::CountEmoticonsInText(u.text, *inputs.emoticons);
      counts.assign(c.begin(), c.end());
      break;
    }
    case Method::kLexicon: {
      if (inputs.lexicon == nullptr) {
        throw std::invalid_argument("lexicon labeling needs a lexicon");
      }
      const auto c = inputs.lexicon->Count(
          affect::Tokenize(u.text, inputs.emoticons), inputs.emoticons);
      counts.assign(c.begin(), c.end());
      break;
    }
    case Method::kContextual: {
      if (inputs.scores == nullptr) {
        throw std::invalid_argument("contextual labeling needs scores");
      }
      const auto& v = inputs.scores->At(u.id);
      const auto best = std::max_element(v.values.begin(), v.values.end());
      if (*best > 0.0) {
        out.label = static_cast<int>(best - v.values.begin());
        out.confidence = *best;
        out.signal_count = 1;
      }
      return out;
    }
  }
  for (double c : counts) out.signal_count += static_cast<int>(c);
  const double best = *std::max_element(counts.begin(), counts.end());
  out.tied = best > 0.0 && std::count(counts.begin(), counts.end(), best) > 1;
  out.label = ResolveTie(counts, CategoryNames(method), policy);
  return out;
}

Labeling LabelCorpus(const corpus::Corpus& corpus, Method method,
                     const AffectInputs& inputs, const TiePolicy& policy) {
  Labeling result;
  result.method = method;
  for (const auto& d : corpus.dialogues) {
    for (const auto& u : d.utterances) {
      auto l = LabelUtterance(u, method, inputs, policy);
      if (l.tied) ++result.ties;
      if (!l.label) ++result.unlabeled;
      result.labels.push_back(std::move(l));
    }
  }
  return result;
}

}  // namespace negaffect::lexcorr
