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

#ifndef NEGAFFECT_PIPELINE_HPP_
#define NEGAFFECT_PIPELINE_HPP_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "negaffect/affect.hpp"
#include "negaffect/corpus.hpp"
#include "negaffect/lexcorr.hpp"
#include "negaffect/stats.hpp"

namespace negaffect::pipeline {

// ---- Configuration ----

struct CategoricalOverride {
  std::vector<std::string> levels;  // empty: observed levels
  std::string reference;            // empty: most frequent level
};

struct RunConfig {
  std::filesystem::path corpus_path;
  std::string corpus_format = "canonical";  // or "release"
  std::filesystem::path lexicon_path;
  std::filesystem::path emoticons_path;
  std::filesystem::path scores_path;      // optional
  std::filesystem::path exclusions_path;  // optional; default policy if empty
  std::vector<std::string> individual_block;
  // Optional explicit blocks per method; otherwise derived from
  // individual_block and the method's affect columns.
  std::map<lexcorr::Method, std::vector<std::vector<std::string>>> blocks;
  std::map<std::string, CategoricalOverride> categorical;
  std::vector<lexcorr::Method> methods{lexcorr::kAllMethods.begin(),
                                       lexcorr::kAllMethods.end()};
  std::string t_test = "unequal";  // or "pooled"
  double alpha0 = 500.0;
  lexcorr::TiePolicy tie_policy;
  double min_count = 3.0;
  std::size_t top_k = 5;
  std::size_t samples_k = 3;
  std::string fit_outcome = "satisfaction";
  lexcorr::Method fit_method = lexcorr::Method::kContextual;
  std::filesystem::path output_dir = "out";
  std::vector<std::string> report_formats{"csv", "md"};

  RunConfig();

  // Relative paths resolve against `base_dir`.
  static RunConfig FromJsonText(std::string_view text,
                                const std::filesystem::path& base_dir);
  static RunConfig Load(const std::filesystem::path& path);

  // Canonical JSON of everything that affects results (output location
  // excluded); the config hash is taken over this text.
  std::string CanonicalJson() const;

  // Throws ValidationError on unknown names or bad values.
  void Check() const;
};

// Default individual-difference block: 7 continuous variables plus the
// three categorical variables, dummy coded.
const std::vector<std::string>& DefaultIndividualBlock();

// ---- Loaded inputs ----

struct Workspace {
  RunConfig config;
  corpus::Corpus corpus;  // exclusions applied
  std::vector<corpus::ExclusionEntry> exclusions;
  affect::EmoticonConfig emoticons;
  affect::Lexicon lexicon;
  std::optional<affect::ContextualScores> scores;
  std::vector<affect::AffectProfile> profiles;
  std::string corpus_hash;  // SHA-256 of the canonical corpus text
  std::string config_hash;

  static Workspace Load(const RunConfig& config);
  // Same, with an already ingested corpus.
  static Workspace FromCorpus(const RunConfig& config, corpus::Corpus corpus);

  lexcorr::AffectInputs inputs() const;
};

corpus::Corpus IngestConfigured(const RunConfig& config);
std::string Sha256Hex(std::string_view data);
std::string CorpusHash(const corpus::Corpus& corpus);

// ---- Analysis rows ----

// Affect feature names for one method, e.g. "self.emoticon.joy".
std::vector<std::string> AffectColumns(lexcorr::Method method,
                                       std::string_view who);
std::vector<std::string> AllAffectColumns(std::string_view who);

struct CategoricalSpec {
  std::vector<std::string> levels;
  std::string reference;
  friend bool operator==(const CategoricalSpec&,
                         const CategoricalSpec&) = default;
};

// Dummy coding per categorical variable ("gender", "ethnicity", "svo").
using Encoding = std::map<std::string, CategoricalSpec>;

Encoding BuildEncoding(const corpus::Corpus& corpus,
                       const std::map<std::string, CategoricalOverride>&
                           overrides);

// One row per participant-in-dialogue, sorted by (dialogue_id, agent). Each
// row carries the participant's own affect and the partner's affect.
stats::AnalysisTable BuildAnalysisTable(
    const corpus::Corpus& corpus,
    const std::vector<affect::AffectProfile>& profiles,
    const Encoding& encoding);

// Replaces categorical names with their dummy columns ("gender" ->
// "gender=Male", ...).
std::vector<std::string> ExpandBlock(const std::vector<std::string>& names,
                                     const Encoding& encoding);

// The three regression blocks for one affect method.
std::vector<std::vector<std::string>> RegressionBlocks(
    const std::vector<std::string>& individual_block, const Encoding& encoding,
    lexcorr::Method method);

// Blocks for `method` from the config (explicit blocks win), categorical
// names expanded. Throws ValidationError for the contextual method when no
// score file is loaded.
std::vector<std::vector<std::string>> ConfiguredBlocks(const Workspace& ws,
                                                       const Encoding& encoding,
                                                       lexcorr::Method method);

// ---- Report tables ----

struct Table {
  std::string name;  // file stem
  std::string title;
  std::vector<std::string> comments;  // CSV header comments
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> notes;  // Markdown notes
};

void WriteCsv(const Table& table, std::ostream& out);
void WriteMarkdown(const Table& table, std::ostream& out);

// ---- Commands ----

Table ProfilesTable(const Workspace& ws);
Table PrevalenceTable(const Workspace& ws);
Table CorrelationsTable(const Workspace& ws);
Table CrossMethodTable(const Workspace& ws);
Table RegressionTable(const Workspace& ws);
Table DiscreteTable(const Workspace& ws);
Table LogOddsTable(const Workspace& ws);
Table SamplesTable(const Workspace& ws);

// Writes each table in every configured format under output_dir. Returns
// the written paths.
std::vector<std::filesystem::path> Emit(const Workspace& ws,
                                        const std::vector<Table>& tables);

// Combined Markdown report plus every table.
std::vector<std::filesystem::path> RunReport(const Workspace& ws);

// ---- Fitted predictor ----

struct FittedPredictor {
  int schema_version = 1;
  std::string outcome;
  std::string method;
  std::vector<std::string> predictor_names;
  std::vector<double> coefficients;  // intercept first
  std::size_t training_n = 0;
  double training_r2 = 0.0;
  Encoding encoding;
  std::string config_hash;
  std::string corpus_hash;

  std::string ToJson() const;
  static FittedPredictor FromJsonText(std::string_view text);
  static FittedPredictor Load(const std::filesystem::path& path);
  void Save(const std::filesystem::path& path) const;
};

struct FitOutput {
  FittedPredictor model;
  stats::StepwiseResult stepwise;
  stats::AnalysisTable table;
};

// Step-3 model (individual + own affect + partner affect).
FitOutput Fit(const Workspace& ws, std::string_view outcome,
              lexcorr::Method method);

struct Prediction {
  stats::RowId id;
  std::string participant_id;
  std::optional<double> value;
  double clamped = 0.0;
  bool out_of_range = false;
  std::string note;
};

// Throws ValidationError listing predictor names the table lacks.
std::vector<Prediction> Predict(const FittedPredictor& model,
                                const stats::AnalysisTable& table,
                                const std::vector<std::string>&
                                    participant_ids = {});
std::vector<Prediction> Predict(const FittedPredictor& model,
                                const Workspace& ws);
Table PredictionsTable(const std::vector<Prediction>& predictions);

}  // namespace negaffect::pipeline

#endif  // NEGAFFECT_PIPELINE_HPP_
