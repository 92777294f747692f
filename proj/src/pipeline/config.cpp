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
#include <set>
#include <sstream>

#include "json.hpp"
#include "negaffect/pipeline.hpp"

namespace negaffect::pipeline {
namespace {

using nlohmann::json;

const std::set<std::string>& KnownKeys() {
  static const std::set<std::string> kKeys{
      "corpus",     "lexicon",   "emoticons",      "scores",
      "exclusions", "individual_block", "categorical", "blocks",
      "methods",    "t_test",    "alpha0",         "tie_policy",
      "min_count",  "top_k",     "samples_k",      "fit",
      "output_dir", "report_formats"};
  return kKeys;
}

const std::set<std::string>& ContinuousIndividual() {
  static const std::set<std::string> kNames{
      "age",           "education",         "extraversion",
      "agreeableness", "conscientiousness", "emotional_stability",
      "openness",      "points",            "partner.points"};
  return kNames;
}

const std::set<std::string>& CategoricalIndividual() {
  static const std::set<std::string> kNames{"gender", "ethnicity", "svo"};
  return kNames;
}

std::filesystem::path Resolve(const std::filesystem::path& base,
                              const std::string& p) {
  if (p.empty()) return {};
  std::filesystem::path path(p);
  return path.is_absolute() ? path : (base / path).lexically_normal();
}

template <typename T>
T Get(const json& j, const char* key, const char* expected) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ValidationError(std::string("config: \"") + key + "\" must be " +
                          expected);
  }
}

lexcorr::Method RequireMethod(const std::string& s) {
  auto m = lexcorr::ParseMethod(s);
  if (!m) {
    throw ValidationError("config: unknown affect method \"" + s +
                          "\" (expected emoticon, lexicon or contextual)");
  }
  return *m;
}

const std::vector<std::string>& LevelsOf(const std::string& variable) {
  if (variable == "gender") return corpus::GenderLevels();
  if (variable == "ethnicity") return corpus::EthnicityLevels();
  return corpus::SvoLevels();
}

// Known names for block definitions: individual variables, dummy columns and
// affect columns.
bool KnownPredictor(const std::string& name) {
  if (ContinuousIndividual().count(name) || CategoricalIndividual().count(name))
    return true;
  const auto eq = name.find('=');
  if (eq != std::string::npos) {
    const std::string var = name.substr(0, eq);
    if (!CategoricalIndividual().count(var)) return false;
    const auto& levels = LevelsOf(var);
    return std::find(levels.begin(), levels.end(), name.substr(eq + 1)) !=
           levels.end();
  }
  for (const char* who : {"self", "partner"}) {
    const auto cols = AllAffectColumns(who);
    if (std::find(cols.begin(), cols.end(), name) != cols.end()) return true;
  }
  return false;
}

}  // namespace

const std::vector<std::string>& DefaultIndividualBlock() {
  static const std::vector<std::string> kBlock{
      "age",           "education",         "extraversion",
      "agreeableness", "conscientiousness", "emotional_stability",
      "openness",      "gender",            "ethnicity",
      "svo"};
  return kBlock;
}

RunConfig::RunConfig() : individual_block(DefaultIndividualBlock()) {}

RunConfig RunConfig::FromJsonText(std::string_view text,
                                  const std::filesystem::path& base_dir) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("config: malformed JSON: ") + e.what());
  }
  if (!root.is_object()) throw ValidationError("config: expected an object");
  for (const auto& [key, _] : root.items()) {
    if (!KnownKeys().count(key)) {
      throw ValidationError("config: unrecognized key \"" + key + "\"");
    }
  }

  RunConfig c;
  if (root.contains("corpus")) {
    const auto& cj = root["corpus"];
    if (!cj.is_object() || !cj.contains("path")) {
      throw ValidationError("config: \"corpus\" must be {\"path\", \"format\"}");
    }
    c.corpus_path = Resolve(base_dir, Get<std::string>(cj, "path", "a string"));
    if (cj.contains("format")) {
      c.corpus_format = Get<std::string>(cj, "format", "a string");
    }
  }
  if (root.contains("lexicon")) {
    c.lexicon_path = Resolve(base_dir, Get<std::string>(root, "lexicon", "a path"));
  }
  if (root.contains("emoticons")) {
    c.emoticons_path =
        Resolve(base_dir, Get<std::string>(root, "emoticons", "a path"));
  }
  if (root.contains("scores") && !root["scores"].is_null()) {
    c.scores_path = Resolve(base_dir, Get<std::string>(root, "scores", "a path"));
  }
  if (root.contains("exclusions") && !root["exclusions"].is_null()) {
    c.exclusions_path =
        Resolve(base_dir, Get<std::string>(root, "exclusions", "a path"));
  }
  if (root.contains("individual_block")) {
    c.individual_block = Get<std::vector<std::string>>(
        root, "individual_block", "a list of names");
  }
  if (root.contains("categorical")) {
    if (!root["categorical"].is_object()) {
      throw ValidationError("config: \"categorical\" must be an object");
    }
    for (const auto& [var, spec] : root["categorical"].items()) {
      CategoricalOverride o;
      if (spec.contains("levels")) {
        o.levels = Get<std::vector<std::string>>(spec, "levels", "a list");
      }
      if (spec.contains("reference")) {
        o.reference = Get<std::string>(spec, "reference", "a string");
      }
      c.categorical[var] = std::move(o);
    }
  }
  if (root.contains("blocks")) {
    if (!root["blocks"].is_object()) {
      throw ValidationError("config: \"blocks\" must map methods to blocks");
    }
    for (const auto& [m, blocks] : root["blocks"].items()) {
      c.blocks[RequireMethod(m)] =
          blocks.get<std::vector<std::vector<std::string>>>();
    }
  }
  if (root.contains("methods")) {
    c.methods.clear();
    for (const auto& m :
         Get<std::vector<std::string>>(root, "methods", "a list of methods")) {
      c.methods.push_back(RequireMethod(m));
    }
  }
  if (root.contains("t_test")) c.t_test = Get<std::string>(root, "t_test", "a string");
  if (root.contains("alpha0")) c.alpha0 = Get<double>(root, "alpha0", "a number");
  if (root.contains("tie_policy")) {
    c.tie_policy = lexcorr::TiePolicy::Parse(
        Get<std::string>(root, "tie_policy", "a string"));
  }
  if (root.contains("min_count")) {
    c.min_count = Get<double>(root, "min_count", "a number");
  }
  if (root.contains("top_k")) c.top_k = Get<std::size_t>(root, "top_k", "a count");
  if (root.contains("samples_k")) {
    c.samples_k = Get<std::size_t>(root, "samples_k", "a count");
  }
  if (root.contains("fit")) {
    const auto& fj = root["fit"];
    if (fj.contains("outcome")) {
      c.fit_outcome = Get<std::string>(fj, "outcome", "a string");
    }
    if (fj.contains("method")) {
      c.fit_method = RequireMethod(Get<std::string>(fj, "method", "a string"));
    }
  }
  if (root.contains("output_dir")) {
    c.output_dir =
        Resolve(base_dir, Get<std::string>(root, "output_dir", "a path"));
  }
  if (root.contains("report_formats")) {
    c.report_formats =
        Get<std::vector<std::string>>(root, "report_formats", "a list");
  }
  c.Check();
  return c;
}

RunConfig RunConfig::Load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return FromJsonText(buf.str(), path.parent_path());
}

std::string RunConfig::CanonicalJson() const {
  nlohmann::ordered_json j;
  j["corpus"] = {{"path", corpus_path.generic_string()},
                 {"format", corpus_format}};
  j["lexicon"] = lexicon_path.generic_string();
  j["emoticons"] = emoticons_path.generic_string();
  j["scores"] = scores_path.generic_string();
  j["exclusions"] = exclusions_path.generic_string();
  j["individual_block"] = individual_block;
  nlohmann::ordered_json cat = nlohmann::ordered_json::object();
  for (const auto& [var, o] : categorical) {
    cat[var] = {{"levels", o.levels}, {"reference", o.reference}};
  }
  j["categorical"] = cat;
  nlohmann::ordered_json blk = nlohmann::ordered_json::object();
  for (const auto& [m, b] : blocks) blk[std::string(lexcorr::MethodName(m))] = b;
  j["blocks"] = blk;
  std::vector<std::string> ms;
  for (auto m : methods) ms.emplace_back(lexcorr::MethodName(m));
  j["methods"] = ms;
  j["t_test"] = t_test;
  j["alpha0"] = alpha0;
  j["tie_policy"] = tie_policy.ToString();
  j["min_count"] = min_count;
  j["top_k"] = top_k;
  j["samples_k"] = samples_k;
  j["fit"] = {{"outcome", fit_outcome},
              {"method", std::string(lexcorr::MethodName(fit_method))}};
  return j.dump();
}

void RunConfig::Check() const {
  if (corpus_format != "canonical" && corpus_format != "release") {
    throw ValidationError("config: corpus format must be canonical or release, "
                          "got \"" + corpus_format + "\"");
  }
  if (t_test != "unequal" && t_test != "pooled") {
    throw ValidationError("config: t_test must be unequal or pooled, got \"" +
                          t_test + "\"");
  }
  if (!(alpha0 > 0.0)) throw ValidationError("config: alpha0 must be positive");
  if (min_count < 0.0) throw ValidationError("config: min_count must be >= 0");
  if (top_k == 0) throw ValidationError("config: top_k must be positive");
  if (methods.empty()) throw ValidationError("config: methods is empty");
  if (fit_outcome != "satisfaction" && fit_outcome != "likeness") {
    throw ValidationError("config: fit outcome must be satisfaction or "
                          "likeness, got \"" + fit_outcome + "\"");
  }
  for (const auto& f : report_formats) {
    if (f != "csv" && f != "md") {
      throw ValidationError("config: unknown report format \"" + f + "\"");
    }
  }
  for (const auto& name : individual_block) {
    if (!ContinuousIndividual().count(name) &&
        !CategoricalIndividual().count(name)) {
      throw ValidationError("config: individual_block names unknown variable \"" +
                            name + "\"");
    }
  }
  for (const auto& [var, o] : categorical) {
    if (!CategoricalIndividual().count(var)) {
      throw ValidationError("config: categorical override for unknown "
                            "variable \"" + var + "\"");
    }
    const auto& all = LevelsOf(var);
    for (const auto& l : o.levels) {
      if (std::find(all.begin(), all.end(), l) == all.end()) {
        throw ValidationError("config: " + var + " has no level \"" + l + "\"");
      }
    }
    if (!o.reference.empty() &&
        std::find(all.begin(), all.end(), o.reference) == all.end()) {
      throw ValidationError("config: " + var + " reference \"" + o.reference +
                            "\" is not a level");
    }
  }
  for (const auto& [m, blocks_for] : blocks) {
    for (const auto& b : blocks_for) {
      for (const auto& name : b) {
        if (!KnownPredictor(name)) {
          throw ValidationError("config: block for " +
                                std::string(lexcorr::MethodName(m)) +
                                " names unknown predictor \"" + name + "\"");
        }
      }
    }
  }
}

}  // namespace negaffect::pipeline
