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
#include <fstream>

#include "json.hpp"
#include "negaffect/affect.hpp"

namespace negaffect::affect {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string JoinIds(const std::vector<std::string>& ids) {
  constexpr std::size_t kShown = 20;
  std::string out;
  for (std::size_t i = 0; i < ids.size() && i < kShown; ++i) {
    if (i > 0) out += ", ";
    out += ids[i];
  }
  if (ids.size() > kShown) {
    out += ", ... (" + std::to_string(ids.size()) + " total)";
  }
  return out;
}

bool IsBlank(std::string_view s) {
  return s.find_first_not_of(" \t\r\n") == std::string_view::npos;
}

}  // namespace

void ContextualScores::Set(std::string utterance_id, ScoreVector v) {
  by_id_[std::move(utterance_id)] = v;
}

const ScoreVector& ContextualScores::At(std::string_view utterance_id) const {
  auto it = by_id_.find(std::string(utterance_id));
  if (it == by_id_.end()) {
    throw ValidationError("no contextual scores for utterance " +
                          std::string(utterance_id));
  }
  return it->second;
}

bool ContextualScores::Contains(std::string_view utterance_id) const {
  return by_id_.count(std::string(utterance_id)) != 0;
}

std::vector<std::string> ContextualScores::Ids() const {
  std::vector<std::string> ids;
  ids.reserve(by_id_.size());
  for (const auto& [id, _] : by_id_) ids.push_back(id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

ContextualScores ParseContextualScores(std::istream& in,
                                       const corpus::Corpus& corpus,
                                       const EmoticonConfig& emoticons) {
  std::unordered_map<std::string, ScoreVector> records;
  std::string model_id;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlank(line)) continue;
    const std::string at = "score file line " + std::to_string(line_no);
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ValidationError(at + ": malformed JSON: " + e.what());
    }
    if (!obj.is_object()) throw ValidationError(at + ": expected an object");
    for (const auto& [key, _] : obj.items()) {
      if (key != "utterance_id" && key != "scores" && key != "model_id" &&
          key != "empty_flag") {
        throw ValidationError(at + ": unknown field \"" + key + "\"");
      }
    }
    if (!obj.contains("utterance_id") || !obj["utterance_id"].is_string()) {
      throw ValidationError(at + ": utterance_id missing");
    }
    const std::string id = obj["utterance_id"].get<std::string>();
    if (!obj.contains("model_id") || !obj["model_id"].is_string() ||
        obj["model_id"].get<std::string>().empty()) {
      throw ValidationError(at + ": utterance " + id + ": model_id missing");
    }
    const std::string mid = obj["model_id"].get<std::string>();
    if (model_id.empty()) {
      model_id = mid;
    } else if (mid != model_id) {
      throw ValidationError(at + ": model_id \"" + mid +
                            "\" differs from \"" + model_id + "\"");
    }
    if (!obj.contains("scores") || !obj["scores"].is_object()) {
      throw ValidationError(at + ": utterance " + id + ": scores missing");
    }
    const json& s = obj["scores"];
    if (s.size() != kNumContextualLabels) {
      throw ValidationError(at + ": utterance " + id +
                            ": expected exactly six labels");
    }
    ScoreVector v;
    for (std::size_t k = 0; k < kNumContextualLabels; ++k) {
      const std::string key(kContextualScoreKeys[k]);
      if (!s.contains(key) || !s[key].is_number()) {
        throw ValidationError(at + ": utterance " + id + ": label " + key +
                              " missing");
      }
      const double x = s[key].get<double>();
      if (!(x >= 0.0 && x <= 1.0)) {
        throw ValidationError(at + ": utterance " + id + ": label " + key +
                              " = " + s[key].dump() + " outside [0,1]");
      }
      v.values[k] = x;
    }
    v.empty_flag = obj.value("empty_flag", false);
    if (v.empty_flag) v.values = {};
    if (!records.emplace(id, v).second) {
      throw ValidationError(at + ": duplicate utterance " + id);
    }
  }

  ContextualScores scores;
  scores.set_model_id(model_id);
  std::vector<std::string> missing;
  for (const auto& d : corpus.dialogues) {
    for (const auto& u : d.utterances) {
      auto it = records.find(u.id);
      if (IsBlank(StripEmoticons(u.text, emoticons))) {
        // Nothing was left to score; any record for it is ignored.
        scores.Set(u.id, ScoreVector{{}, true});
      } else if (it != records.end()) {
        scores.Set(u.id, it->second);
      } else {
        missing.push_back(u.id);
      }
    }
  }
  if (!missing.empty()) {
    throw ValidationError("score file lacks " + std::to_string(missing.size()) +
                          " utterance(s): " + JoinIds(missing));
  }
  return scores;
}

ContextualScores LoadContextualScores(const std::filesystem::path& path,
                                      const corpus::Corpus& corpus,
                                      const EmoticonConfig& emoticons) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open score file " + path.string());
  return ParseContextualScores(in, corpus, emoticons);
}

void WriteContextualScores(const ContextualScores& scores, std::ostream& out) {
  for (const auto& id : scores.Ids()) {
    const auto& v = scores.At(id);
    ordered_json o;
    o["utterance_id"] = id;
    ordered_json s;
    for (std::size_t k = 0; k < kNumContextualLabels; ++k) {
      s[std::string(kContextualScoreKeys[k])] = v.values[k];
    }
    o["scores"] = std::move(s);
    o["model_id"] = scores.model_id();
    if (v.empty_flag) o["empty_flag"] = true;
    out << o.dump() << '\n';
  }
}

void WriteScorerInput(const corpus::Corpus& corpus,
                      const EmoticonConfig& emoticons, std::ostream& out) {
  for (const auto& d : corpus.dialogues) {
    for (const auto& u : d.utterances) {
      ordered_json o;
      o["utterance_id"] = u.id;
      o["text"] = StripEmoticons(u.text, emoticons);
      out << o.dump() << '\n';
    }
  }
}

ContextualSums AggregateContextual(const ContextualScores& scores,
                                   const corpus::Dialogue& d, int agent) {
  ContextualSums sums{};
  for (const auto* u : corpus::UtterancesOf(d, agent)) {
    const auto& v = scores.At(u->id);
    for (std::size_t k = 0; k < sums.size(); ++k) sums[k] += v.values[k];
  }
  return sums;
}

}  // namespace negaffect::affect
