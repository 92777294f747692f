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

#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "negaffect/corpus.hpp"

namespace negaffect::corpus {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string NowUtc() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

// Reads fields from one JSON object, tracking a location string for error
// messages and rejecting keys the schema does not name.
class ObjectReader {
 public:
  ObjectReader(const json& obj, std::string where,
               std::initializer_list<std::string_view> allowed)
      : obj_(obj), where_(std::move(where)) {
    if (!obj_.is_object()) Fail("", "expected an object");
    for (const auto& [key, _] : obj_.items()) {
      bool ok = false;
      for (auto a : allowed) ok = ok || a == key;
      if (!ok) Fail(key, "unknown field");
    }
  }

  [[noreturn]] void Fail(std::string_view field, std::string_view what) const {
    std::string msg = where_;
    if (!field.empty()) msg += std::string(where_.empty() ? "" : ".") +
                               std::string(field);
    throw ValidationError(msg + ": " + std::string(what));
  }

  const json* Find(std::string_view key) const {
    auto it = obj_.find(key);
    if (it == obj_.end() || it->is_null()) return nullptr;
    return &*it;
  }

  const json& Require(std::string_view key) const {
    const json* v = Find(key);
    if (v == nullptr) Fail(key, "required field missing");
    return *v;
  }

  std::string String(std::string_view key) const {
    const json& v = Require(key);
    if (!v.is_string()) Fail(key, "expected a string");
    return v.get<std::string>();
  }

  Field<int> OptionalInt(std::string_view key) const {
    const json* v = Find(key);
    if (v == nullptr) return {};
    if (!v->is_number_integer()) {
      if (v->is_number_float()) {
        const double d = v->get<double>();
        if (d == static_cast<int>(d)) return static_cast<int>(d);
      }
      Fail(key, "expected an integer, got " + v->dump());
    }
    return v->get<int>();
  }

  Field<double> OptionalNumber(std::string_view key) const {
    const json* v = Find(key);
    if (v == nullptr) return {};
    if (!v->is_number()) Fail(key, "expected a number, got " + v->dump());
    return v->get<double>();
  }

  Field<double> RequiredNumber(std::string_view key) const {
    Require(key);
    return OptionalNumber(key);
  }

  template <typename E, typename ParseFn>
  Field<E> OptionalLevel(std::string_view key, ParseFn parse) const {
    const json* v = Find(key);
    if (v == nullptr) return {};
    if (!v->is_string()) Fail(key, "expected a string");
    auto level = parse(v->get<std::string>());
    if (!level) Fail(key, "unknown level \"" + v->get<std::string>() + "\"");
    return *level;
  }

  const std::string& where() const { return where_; }

 private:
  const json& obj_;
  std::string where_;
};

ParticipantRecord ReadParticipant(const json& obj, const std::string& where) {
  ObjectReader r(obj, where,
                 {"participant_id", "age", "education", "gender", "ethnicity",
                  "svo", "big5", "priorities", "satisfaction", "likeness",
                  "points"});
  ParticipantRecord p;
  p.participant_id = r.String("participant_id");
  p.age = r.OptionalInt("age");
  p.education = r.OptionalInt("education");
  p.gender = r.OptionalLevel<Gender>("gender", ParseGender);
  p.ethnicity = r.OptionalLevel<Ethnicity>("ethnicity", ParseEthnicity);
  r.Require("svo");
  p.svo = r.OptionalLevel<Svo>("svo", ParseSvo);

  ObjectReader b(r.Require("big5"), where + ".big5",
                 {"extraversion", "agreeableness", "conscientiousness",
                  "emotional_stability", "openness"});
  p.big5.extraversion = b.RequiredNumber("extraversion");
  p.big5.agreeableness = b.RequiredNumber("agreeableness");
  p.big5.conscientiousness = b.RequiredNumber("conscientiousness");
  p.big5.emotional_stability = b.RequiredNumber("emotional_stability");
  p.big5.openness = b.RequiredNumber("openness");

  ObjectReader pr(r.Require("priorities"), where + ".priorities",
                  {"Food", "Water", "Firewood"});
  for (Issue issue : {Issue::kFood, Issue::kWater, Issue::kFirewood}) {
    const std::string key(Name(issue));
    const std::string level = pr.String(key);
    auto parsed = ParsePriorityLevel(level);
    if (!parsed) pr.Fail(key, "unknown priority \"" + level + "\"");
    p.priorities[static_cast<int>(issue)] = *parsed;
  }
  p.satisfaction = r.OptionalInt("satisfaction");
  p.likeness = r.OptionalInt("likeness");
  p.points = r.OptionalNumber("points");
  return p;
}

Dialogue ReadDialogue(const json& obj, std::size_t line_no) {
  const std::string line_where = "line " + std::to_string(line_no);
  ObjectReader top(obj, line_where, {"dialogue_id", "utterances",
                                     "participants"});
  Dialogue d;
  d.dialogue_id = top.String("dialogue_id");
  const std::string where = "dialogue " + d.dialogue_id;

  const json& utts = top.Require("utterances");
  if (!utts.is_array()) top.Fail("utterances", "expected an array");
  int turn = 0;
  for (const auto& u : utts) {
    const std::string uw = where + ".utterances[" + std::to_string(turn) + "]";
    ObjectReader ur(u, uw, {"id", "speaker", "text"});
    Utterance out;
    out.id = ur.String("id");
    const json& spk = ur.Require("speaker");
    if (!spk.is_number_integer()) ur.Fail("speaker", "expected 0 or 1");
    out.speaker = spk.get<int>();
    out.text = ur.String("text");
    out.turn_index = turn++;
    d.utterances.push_back(std::move(out));
  }

  const json& parts = top.Require("participants");
  if (!parts.is_array() || parts.size() != 2) {
    top.Fail("participants", "expected an array of exactly two objects");
  }
  for (int a = 0; a < 2; ++a) {
    d.participants[a] = ReadParticipant(
        parts[a], where + ".participants[" + std::to_string(a) + "]");
  }
  Validate(d);
  return d;
}

template <typename T>
void PutIfKnown(ordered_json& obj, const char* key, const Field<T>& f) {
  if (f.presence() != Presence::kMissing) obj[key] = f.raw();
}

template <typename E>
void PutLevel(ordered_json& obj, const char* key, const Field<E>& f) {
  if (f.presence() != Presence::kMissing) obj[key] = std::string(Name(f.raw()));
}

ordered_json ParticipantJson(const ParticipantRecord& p) {
  ordered_json o;
  o["participant_id"] = p.participant_id;
  PutIfKnown(o, "age", p.age);
  PutIfKnown(o, "education", p.education);
  PutLevel(o, "gender", p.gender);
  PutLevel(o, "ethnicity", p.ethnicity);
  PutLevel(o, "svo", p.svo);
  ordered_json b = ordered_json::object();
  PutIfKnown(b, "extraversion", p.big5.extraversion);
  PutIfKnown(b, "agreeableness", p.big5.agreeableness);
  PutIfKnown(b, "conscientiousness", p.big5.conscientiousness);
  PutIfKnown(b, "emotional_stability", p.big5.emotional_stability);
  PutIfKnown(b, "openness", p.big5.openness);
  o["big5"] = b;
  ordered_json pr;
  for (Issue issue : {Issue::kFood, Issue::kWater, Issue::kFirewood}) {
    pr[std::string(Name(issue))] =
        std::string(Name(p.priorities[static_cast<int>(issue)]));
  }
  o["priorities"] = pr;
  PutIfKnown(o, "satisfaction", p.satisfaction);
  PutIfKnown(o, "likeness", p.likeness);
  PutIfKnown(o, "points", p.points);
  return o;
}

}  // namespace

Corpus ParseCanonical(std::istream& in, std::string_view source_name) {
  Corpus c;
  c.provenance.source_format = "canonical";
  c.provenance.source_path = std::string(source_name);
  c.provenance.ingested_at = NowUtc();
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ValidationError("line " + std::to_string(line_no) +
                            ": malformed JSON: " + e.what());
    }
    c.dialogues.push_back(ReadDialogue(obj, line_no));
  }
  Validate(c);
  c.report.dialogues = c.dialogues.size();
  for (const auto& d : c.dialogues) c.report.utterances += d.utterances.size();
  c.report.participant_rows = 2 * c.dialogues.size();
  return c;
}

Corpus IngestCanonical(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open corpus file " + path.string());
  return ParseCanonical(in, path.string());
}

std::string ToCanonicalLine(const Dialogue& d) {
  ordered_json o;
  o["dialogue_id"] = d.dialogue_id;
  ordered_json utts = ordered_json::array();
  for (const auto& u : d.utterances) {
    ordered_json uj;
    uj["id"] = u.id;
    uj["speaker"] = u.speaker;
    uj["text"] = u.text;
    utts.push_back(std::move(uj));
  }
  o["utterances"] = std::move(utts);
  o["participants"] = ordered_json::array(
      {ParticipantJson(d.participants[0]), ParticipantJson(d.participants[1])});
  return o.dump();
}

void WriteCanonical(const Corpus& corpus, std::ostream& out) {
  for (const auto& d : corpus.dialogues) out << ToCanonicalLine(d) << '\n';
}

}  // namespace negaffect::corpus
