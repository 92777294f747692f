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
#include <sstream>

#include "fmt/format.h"
#include "json.hpp"
#include "negaffect/pipeline.hpp"

namespace negaffect::pipeline {

std::vector<std::vector<std::string>> ConfiguredBlocks(const Workspace& ws,
                                                       const Encoding& encoding,
                                                       lexcorr::Method method) {
  if (method == lexcorr::Method::kContextual && !ws.scores) {
    throw ValidationError(
        "the contextual method needs a score file (config key \"scores\")");
  }
  const auto it = ws.config.blocks.find(method);
  if (it == ws.config.blocks.end()) {
    return RegressionBlocks(ws.config.individual_block, encoding, method);
  }
  std::vector<std::vector<std::string>> blocks;
  for (const auto& b : it->second) blocks.push_back(ExpandBlock(b, encoding));
  return blocks;
}

std::string FittedPredictor::ToJson() const {
  nlohmann::ordered_json j;
  j["schema_version"] = schema_version;
  j["outcome"] = outcome;
  j["method"] = method;
  j["intercept"] = coefficients.at(0);
  auto coefs = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < predictor_names.size(); ++i) {
    coefs.push_back({{"name", predictor_names[i]},
                     {"value", coefficients.at(i + 1)}});
  }
  j["coefficients"] = coefs;
  j["training"] = {{"n", training_n}, {"r2", training_r2}};
  auto enc = nlohmann::ordered_json::object();
  for (const auto& [var, spec] : encoding) {
    enc[var] = {{"levels", spec.levels}, {"reference", spec.reference}};
  }
  j["encoding"] = enc;
  j["provenance"] = {{"config_sha256", config_hash},
                     {"corpus_sha256", corpus_hash}};
  return j.dump(2) + "\n";
}

FittedPredictor FittedPredictor::FromJsonText(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("model file: malformed JSON: ") +
                          e.what());
  }
  FittedPredictor m;
  try {
    m.schema_version = j.at("schema_version").get<int>();
    if (m.schema_version != 1) {
      throw ValidationError("model file: unsupported schema_version " +
                            std::to_string(m.schema_version));
    }
    m.outcome = j.at("outcome").get<std::string>();
    m.method = j.at("method").get<std::string>();
    m.coefficients.push_back(j.at("intercept").get<double>());
    for (const auto& c : j.at("coefficients")) {
      m.predictor_names.push_back(c.at("name").get<std::string>());
      m.coefficients.push_back(c.at("value").get<double>());
    }
    m.training_n = j.at("training").at("n").get<std::size_t>();
    m.training_r2 = j.at("training").at("r2").get<double>();
    for (const auto& [var, spec] : j.at("encoding").items()) {
      m.encoding[var] = {spec.at("levels").get<std::vector<std::string>>(),
                         spec.at("reference").get<std::string>()};
    }
    m.config_hash = j.at("provenance").at("config_sha256").get<std::string>();
    m.corpus_hash = j.at("provenance").at("corpus_sha256").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("model file: ") + e.what());
  }
  if (m.config_hash.empty() || m.corpus_hash.empty()) {
    throw ValidationError("model file: provenance hashes are empty");
  }
  return m;
}

FittedPredictor FittedPredictor::Load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open model file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return FromJsonText(buf.str());
}

void FittedPredictor::Save(const std::filesystem::path& path) const {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write model file " + path.string());
  out << ToJson();
  if (!out) throw IoError("write failed: " + path.string());
}

FitOutput Fit(const Workspace& ws, std::string_view outcome,
              lexcorr::Method method) {
  if (outcome != "satisfaction" && outcome != "likeness") {
    throw ValidationError("fit: outcome must be satisfaction or likeness");
  }
  FitOutput out;
  const Encoding enc = BuildEncoding(ws.corpus, ws.config.categorical);
  out.table = BuildAnalysisTable(ws.corpus, ws.profiles, enc);
  out.stepwise = stats::HierarchicalFit(
      out.table, ConfiguredBlocks(ws, enc, method), outcome);
  const auto& last = out.stepwise.steps.back();
  out.model.outcome = std::string(outcome);
  out.model.method = std::string(lexcorr::MethodName(method));
  out.model.predictor_names = last.predictor_names;
  out.model.coefficients = last.coefficients;
  out.model.training_n = last.n;
  out.model.training_r2 = last.r2;
  out.model.encoding = enc;
  out.model.config_hash = ws.config_hash;
  out.model.corpus_hash = ws.corpus_hash;
  return out;
}

std::vector<Prediction> Predict(const FittedPredictor& model,
                                const stats::AnalysisTable& table,
                                const std::vector<std::string>&
                                    participant_ids) {
  if (model.coefficients.size() != model.predictor_names.size() + 1) {
    throw ValidationError("model: coefficient count must be predictor count + 1");
  }
  std::vector<std::string> missing;
  std::vector<std::size_t> idx;
  for (const auto& name : model.predictor_names) {
    if (table.HasColumn(name)) {
      idx.push_back(table.ColumnIndex(name));
    } else {
      missing.push_back(name);
    }
  }
  if (!missing.empty()) {
    std::string list;
    for (const auto& m : missing) list += (list.empty() ? "" : ", ") + m;
    throw ValidationError("predict: input lacks predictors: " + list);
  }

  std::vector<Prediction> out;
  std::vector<double> x(idx.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    Prediction p;
    p.id = table.ids[r];
    if (r < participant_ids.size()) p.participant_id = participant_ids[r];
    std::string absent;
    for (std::size_t j = 0; j < idx.size(); ++j) {
      const auto& v = table.rows[r][idx[j]];
      if (v) {
        x[j] = *v;
      } else {
        absent += (absent.empty() ? "" : ";") + model.predictor_names[j];
      }
    }
    if (absent.empty()) {
      const double y = stats::LinearPredict(model.coefficients, x);
      p.value = y;
      p.clamped = std::clamp(y, 1.0, 5.0);
      p.out_of_range = y < 1.0 || y > 5.0;
    } else {
      p.note = "missing " + absent;
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Prediction> Predict(const FittedPredictor& model,
                                const Workspace& ws) {
  const auto table = BuildAnalysisTable(ws.corpus, ws.profiles, model.encoding);
  std::vector<std::string> ids;
  for (const auto& id : table.ids) {
    for (const auto& d : ws.corpus.dialogues) {
      if (d.dialogue_id == id.dialogue_id) {
        ids.push_back(d.participants[id.agent].participant_id);
        break;
      }
    }
  }
  return Predict(model, table, ids);
}

Table PredictionsTable(const std::vector<Prediction>& predictions) {
  Table t;
  t.name = "predictions";
  t.title = "Predictions";
  t.header = {"dialogue_id", "agent",   "participant_id", "predicted",
              "clamped",     "out_of_range", "note"};
  for (const auto& p : predictions) {
    t.rows.push_back(
        {p.id.dialogue_id, std::to_string(p.id.agent), p.participant_id,
         p.value ? fmt::format("{:.6f}", *p.value) : "",
         p.value ? fmt::format("{:.6f}", p.clamped) : "",
         p.value ? (p.out_of_range ? "true" : "false") : "", p.note});
  }
  return t;
}

}  // namespace negaffect::pipeline
