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
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "negaffect/corpus.hpp"

namespace negaffect::corpus {
namespace {

using nlohmann::json;

constexpr std::array<std::string_view, 4> kDealActions{
    "Submit-Deal", "Accept-Deal", "Reject-Deal", "Walk-Away"};
constexpr std::array<std::string_view, 2> kAgentKeys{"mturk_agent_1",
                                                     "mturk_agent_2"};

std::string Lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::string Trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

bool Contains(std::string_view hay, std::string_view needle) {
  return hay.find(needle) != std::string_view::npos;
}

void CheckKeys(const json& obj, const std::string& where,
               std::initializer_list<std::string_view> known) {
  if (!obj.is_object()) {
    throw ValidationError(where + ": expected an object");
  }
  for (const auto& [key, _] : obj.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw ValidationError(where + ": unrecognized key \"" + key + "\"");
    }
  }
}

const json* Child(const json& obj, std::string_view key) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return nullptr;
  return &*it;
}

std::optional<double> AsNumber(const json* v) {
  if (v == nullptr) return std::nullopt;
  if (v->is_number()) return v->get<double>();
  if (v->is_string()) {
    const std::string s = Trim(v->get<std::string>());
    if (s.empty()) return std::nullopt;
    try {
      std::size_t used = 0;
      const double d = std::stod(s, &used);
      if (used == s.size()) return d;
    } catch (const std::exception&) {
    }
  }
  return std::nullopt;
}

std::optional<std::string> AsString(const json* v) {
  if (v == nullptr || !v->is_string()) return std::nullopt;
  std::string s = Trim(v->get<std::string>());
  if (s.empty()) return std::nullopt;
  return s;
}

Field<int> LikertFromRelease(const json* v, bool likeness,
                             const std::string& where) {
  if (v == nullptr) return {};
  if (v->is_number_integer()) return v->get<int>();
  const auto s = AsString(v);
  if (!s) return {};
  const std::string l = Lower(*s);
  static const std::array<std::string_view, 5> kSatisfaction{
      "extremely dissatisfied", "slightly dissatisfied", "undecided",
      "slightly satisfied", "extremely satisfied"};
  static const std::array<std::string_view, 5> kLikeness{
      "extremely dislike", "slightly dislike", "undecided", "slightly like",
      "extremely like"};
  const auto& scale = likeness ? kLikeness : kSatisfaction;
  for (int i = 0; i < 5; ++i) {
    if (l == scale[i]) return i + 1;
  }
  throw ValidationError(where + ": unknown response \"" + *s + "\"");
}

Field<Gender> GenderFromRelease(const json* v) {
  const auto s = AsString(v);
  if (!s) return {};
  const std::string l = Lower(*s);
  if (l == "female" || l == "woman") return Gender::kFemale;
  if (l == "male" || l == "man") return Gender::kMale;
  return Gender::kOther;
}

Field<Ethnicity> EthnicityFromRelease(const json* v) {
  const auto s = AsString(v);
  if (!s) return {};
  const std::string l = Lower(*s);
  if (Contains(l, "white")) return Ethnicity::kWhiteAmerican;
  if (Contains(l, "asian")) return Ethnicity::kAsianAmerican;
  if (Contains(l, "black") || Contains(l, "african"))
    return Ethnicity::kBlackOrAfricanAmerican;
  if (Contains(l, "hispanic") || Contains(l, "latin"))
    return Ethnicity::kHispanicOrLatino;
  if (Contains(l, "native") || Contains(l, "indian") ||
      Contains(l, "islander") || Contains(l, "alaska") ||
      Contains(l, "hawaii"))
    return Ethnicity::kNativeOrIslander;
  return Ethnicity::kOther;
}

Field<Svo> SvoFromRelease(const json* v, const std::string& where) {
  const auto s = AsString(v);
  if (!s) return {};
  const std::string l = Lower(*s);
  if (l == "prosocial") return Svo::kProsocial;
  if (l == "proself") return Svo::kProself;
  if (l == "unclassified") return Svo::kUnclassified;
  throw ValidationError(where + ": unknown svo \"" + *s + "\"");
}

ParticipantRecord ReadAgent(const json& info, const std::string& dialogue_id,
                            int agent, const std::string& where) {
  CheckKeys(info, where,
            {"value2issue", "value2reason", "outcomes", "demographics",
             "personality"});
  ParticipantRecord p;
  p.participant_id = dialogue_id + "_agent" + std::to_string(agent + 1);

  if (const json* v2i = Child(info, "value2issue")) {
    CheckKeys(*v2i, where + ".value2issue", {"High", "Medium", "Low"});
    std::array<bool, 3> assigned{false, false, false};
    for (const auto& [level_name, issue_json] : v2i->items()) {
      const auto level = ParsePriorityLevel(level_name);
      const auto issue =
          issue_json.is_string() ? ParseIssue(issue_json.get<std::string>())
                                 : std::nullopt;
      if (!issue) {
        throw ValidationError(where + ".value2issue." + level_name +
                              ": unknown issue " + issue_json.dump());
      }
      p.priorities[static_cast<int>(*issue)] = *level;
      assigned[static_cast<int>(*issue)] = true;
    }
    if (!std::all_of(assigned.begin(), assigned.end(), [](bool b) { return b; })) {
      throw ValidationError(where + ".value2issue: not a permutation");
    }
  } else {
    throw ValidationError(where + ": required key \"value2issue\" missing");
  }

  if (const json* out = Child(info, "outcomes")) {
    CheckKeys(*out, where + ".outcomes",
              {"points_scored", "satisfaction", "opponent_likeness"});
    if (auto pts = AsNumber(Child(*out, "points_scored"))) p.points = *pts;
    p.satisfaction = LikertFromRelease(Child(*out, "satisfaction"), false,
                                       where + ".outcomes.satisfaction");
    p.likeness = LikertFromRelease(Child(*out, "opponent_likeness"), true,
                                   where + ".outcomes.opponent_likeness");
  }

  if (const json* demo = Child(info, "demographics")) {
    CheckKeys(*demo, where + ".demographics",
              {"age", "gender", "ethnicity", "education"});
    if (auto age = AsNumber(Child(*demo, "age"))) {
      p.age = static_cast<int>(*age);
    }
    p.gender = GenderFromRelease(Child(*demo, "gender"));
    p.ethnicity = EthnicityFromRelease(Child(*demo, "ethnicity"));
    if (auto edu = AsString(Child(*demo, "education"))) {
      if (auto ord = EducationOrdinal(*edu)) p.education = *ord;
    } else if (auto num = AsNumber(Child(*demo, "education"))) {
      p.education = static_cast<int>(*num);
    }
  }

  if (const json* pers = Child(info, "personality")) {
    CheckKeys(*pers, where + ".personality", {"svo", "big-five"});
    p.svo = SvoFromRelease(Child(*pers, "svo"), where + ".personality.svo");
    if (const json* b5 = Child(*pers, "big-five")) {
      CheckKeys(*b5, where + ".personality.big-five",
                {"extraversion", "agreeableness", "conscientiousness",
                 "emotional-stability", "openness-to-experiences"});
      auto get = [&](std::string_view key) -> Field<double> {
        if (auto v = AsNumber(Child(*b5, key))) return *v;
        return {};
      };
      p.big5.extraversion = get("extraversion");
      p.big5.agreeableness = get("agreeableness");
      p.big5.conscientiousness = get("conscientiousness");
      p.big5.emotional_stability = get("emotional-stability");
      p.big5.openness = get("openness-to-experiences");
    }
  }
  return p;
}

Dialogue ReadReleaseDialogue(const json& obj, std::size_t index,
                             std::size_t* skipped) {
  const std::string at = "dialogue[" + std::to_string(index) + "]";
  CheckKeys(obj, at,
            {"chat_logs", "participant_info", "annotations", "dialogue_id"});
  Dialogue d;
  if (const json* id = Child(obj, "dialogue_id")) {
    d.dialogue_id = id->is_string() ? id->get<std::string>() : id->dump();
  } else {
    d.dialogue_id = std::to_string(index);
  }
  const std::string where = "dialogue " + d.dialogue_id;

  const json* info = Child(obj, "participant_info");
  if (info == nullptr) {
    throw ValidationError(where + ": required key \"participant_info\" missing");
  }
  CheckKeys(*info, where + ".participant_info",
            {kAgentKeys[0], kAgentKeys[1]});
  for (int a = 0; a < 2; ++a) {
    const json* agent = Child(*info, kAgentKeys[a]);
    if (agent == nullptr) {
      throw ValidationError(where + ".participant_info: missing " +
                            std::string(kAgentKeys[a]));
    }
    d.participants[a] =
        ReadAgent(*agent, d.dialogue_id, a,
                  where + ".participant_info." + std::string(kAgentKeys[a]));
  }

  const json* logs = Child(obj, "chat_logs");
  if (logs == nullptr || !logs->is_array()) {
    throw ValidationError(where + ": chat_logs must be an array");
  }
  int turn = 0;
  for (std::size_t i = 0; i < logs->size(); ++i) {
    const json& msg = (*logs)[i];
    const std::string mw = where + ".chat_logs[" + std::to_string(i) + "]";
    CheckKeys(msg, mw, {"text", "task_data", "id"});
    const auto text = AsString(Child(msg, "text"));
    const auto agent_id = AsString(Child(msg, "id"));
    if (!agent_id) throw ValidationError(mw + ": missing speaker id");
    int speaker = -1;
    for (int a = 0; a < 2; ++a) {
      if (*agent_id == kAgentKeys[a]) speaker = a;
    }
    if (speaker < 0) {
      throw ValidationError(mw + ": unknown speaker \"" + *agent_id + "\"");
    }
    if (!text || std::find(kDealActions.begin(), kDealActions.end(), *text) !=
                     kDealActions.end()) {
      ++*skipped;
      continue;
    }
    Utterance u;
    u.id = d.dialogue_id + "_" + std::to_string(i);
    u.speaker = speaker;
    u.text = Child(msg, "text")->get<std::string>();
    u.turn_index = turn++;
    d.utterances.push_back(std::move(u));
  }
  Validate(d);
  return d;
}

}  // namespace

std::optional<int> EducationOrdinal(std::string_view release_value) {
  const std::string l = Lower(release_value);
  if (Contains(l, "doctor") || Contains(l, "phd")) return 8;
  if (Contains(l, "professional")) return 7;
  if (Contains(l, "master")) return 6;
  // Partial attainment is matched before the degree it mentions.
  if (Contains(l, "some high school") || Contains(l, "no diploma")) return 1;
  if (Contains(l, "less than") || Contains(l, "no schooling") ||
      Contains(l, "elementary") || Contains(l, "middle school"))
    return 0;
  if (Contains(l, "no degree") ||
      (Contains(l, "some") && Contains(l, "college")) ||
      Contains(l, "trade") || Contains(l, "technical") ||
      Contains(l, "vocational"))
    return 3;
  if (Contains(l, "bachelor") || Contains(l, "4 year")) return 5;
  if (Contains(l, "associate") || Contains(l, "2 year")) return 4;
  if (Contains(l, "high school graduate") || Contains(l, "ged") ||
      Contains(l, "diploma"))
    return 2;
  return std::nullopt;
}

Corpus ParseRelease(std::string_view json_text, std::string_view source_name) {
  if (Trim(json_text).empty()) {
    throw ValidationError(std::string(source_name) + ": release file is empty");
  }
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string(source_name) +
                          ": malformed JSON: " + e.what());
  }
  if (!root.is_array()) {
    throw ValidationError(std::string(source_name) +
                          ": expected a JSON array of dialogues");
  }
  if (root.empty()) {
    throw ValidationError(std::string(source_name) + ": no dialogues");
  }
  Corpus c;
  c.provenance.source_format = "release";
  c.provenance.source_path = std::string(source_name);
  {
    std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    c.provenance.ingested_at = buf;
  }
  for (std::size_t i = 0; i < root.size(); ++i) {
    c.dialogues.push_back(
        ReadReleaseDialogue(root[i], i, &c.report.skipped_messages));
  }
  Validate(c);
  c.report.dialogues = c.dialogues.size();
  for (const auto& d : c.dialogues) c.report.utterances += d.utterances.size();
  c.report.participant_rows = 2 * c.dialogues.size();
  return c;
}

Corpus IngestReleaseAdapter(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open release file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseRelease(buf.str(), path.string());
}

}  // namespace negaffect::corpus
