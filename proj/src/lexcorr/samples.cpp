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

std::vector<Sample> TopConfidentSamples(
    const corpus::Corpus& corpus, const std::map<Method, Labeling>& labelings,
    int category, std::size_t k, const std::vector<Method>& undetected_by) {
  const auto ctx = labelings.find(Method::kContextual);
  if (ctx == labelings.end()) {
    throw std::invalid_argument("samples: contextual labels required");
  }
  std::vector<const Labeling*> filters;
  for (Method m : undetected_by) {
    const auto it = labelings.find(m);
    if (it == labelings.end()) {
      throw std::invalid_argument("samples: labels for " +
                                  std::string(MethodName(m)) + " required");
    }
    filters.push_back(&it->second);
  }

  std::vector<Sample> out;
  std::size_t i = 0;
  for (const auto& d : corpus.dialogues) {
    for (const auto& u : d.utterances) {
      const std::size_t idx = i++;
      const auto& l = ctx->second.labels.at(idx);
      if (!l.label || *l.label != category) continue;
      const bool clean = std::all_of(
          filters.begin(), filters.end(),
          [&](const Labeling* f) { return f->labels.at(idx).undetected(); });
      if (!clean) continue;
      out.push_back({u.id, d.dialogue_id, u.text, l.confidence});
    }
  }
  std::sort(out.begin(), out.end(), [](const Sample& a, const Sample& b) {
    if (a.confidence != b.confidence) return a.confidence > b.confidence;
    return a.utterance_id < b.utterance_id;
  });
  if (out.size() > k) out.resize(k);
  return out;
}

}  // namespace negaffect::lexcorr
