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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "negaffect/pipeline.hpp"

namespace fs = std::filesystem;
using namespace negaffect;

namespace {

// Flags that mirror config keys. Unset flags leave the config value alone.
struct Overrides {
  std::string config;
  std::string corpus, corpus_format, lexicon, emoticons, scores, exclusions;
  std::vector<std::string> methods;
  std::string t_test, tie_policy, out;
  std::optional<double> alpha0, min_count;
  std::optional<std::size_t> top_k, samples_k;
  std::vector<std::string> formats;

  void Register(CLI::App& app) {
    app.add_option("--config", config, "Run configuration (JSON)");
    app.add_option("--corpus", corpus, "Corpus file");
    app.add_option("--corpus-format", corpus_format, "canonical or release");
    app.add_option("--lexicon", lexicon, "Affect lexicon file");
    app.add_option("--emoticons", emoticons, "Emoticon config (JSON)");
    app.add_option("--scores", scores, "Contextual score file (JSONL)");
    app.add_option("--exclusions", exclusions, "Exclusion policy (JSON)");
    app.add_option("--methods", methods, "Affect methods")->delimiter(',');
    app.add_option("--t-test", t_test, "unequal or pooled");
    app.add_option("--alpha0", alpha0, "Dirichlet prior total");
    app.add_option("--tie-policy", tie_policy, "drop or priority:A>B>...");
    app.add_option("--min-count", min_count, "Minimum background count");
    app.add_option("--top-k", top_k, "Tokens per category");
    app.add_option("--samples-k", samples_k, "Samples per category");
    app.add_option("--out", out, "Output directory");
    app.add_option("--formats", formats, "Report formats (csv,md)")
        ->delimiter(',');
  }

  pipeline::RunConfig Build() const {
    pipeline::RunConfig c =
        config.empty() ? pipeline::RunConfig() : pipeline::RunConfig::Load(config);
    if (!corpus.empty()) c.corpus_path = corpus;
    if (!corpus_format.empty()) c.corpus_format = corpus_format;
    if (!lexicon.empty()) c.lexicon_path = lexicon;
    if (!emoticons.empty()) c.emoticons_path = emoticons;
    if (!scores.empty()) c.scores_path = scores == "none" ? fs::path() : fs::path(scores);
    if (!exclusions.empty()) c.exclusions_path = exclusions;
    if (!methods.empty()) {
      c.methods.clear();
      for (const auto& m : methods) {
        const auto parsed = lexcorr::ParseMethod(m);
        if (!parsed) throw ValidationError("unknown method \"" + m + "\"");
        c.methods.push_back(*parsed);
      }
    }
    if (!t_test.empty()) c.t_test = t_test;
    if (alpha0) c.alpha0 = *alpha0;
    if (!tie_policy.empty()) c.tie_policy = lexcorr::TiePolicy::Parse(tie_policy);
    if (min_count) c.min_count = *min_count;
    if (top_k) c.top_k = *top_k;
    if (samples_k) c.samples_k = *samples_k;
    if (!out.empty()) c.output_dir = out;
    if (!formats.empty()) c.report_formats = formats;
    c.Check();
    return c;
  }
};

void PrintWritten(const std::vector<fs::path>& paths) {
  for (const auto& p : paths) std::cout << "wrote " << p.string() << "\n";
}

void WriteText(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Affect features and outcome analysis for negotiation dialogues"};
  app.require_subcommand(1);
  app.fallthrough();
  Overrides ov;
  ov.Register(app);

  auto* ingest = app.add_subcommand("ingest", "Validate a corpus and write it in canonical form");
  std::string ingest_out;
  ingest->add_option("--write", ingest_out, "Canonical output (default <out>/corpus.jsonl)");

  auto* extract = app.add_subcommand("extract", "Affect profiles per participant");
  std::string scorer_input;
  extract->add_option("--scorer-input", scorer_input,
                      "Also write the scorer input file (emoticons stripped)");

  auto* analyze = app.add_subcommand("analyze", "Run one analysis");
  std::string kind;
  analyze->add_option("kind", kind, "correlations|regression|discrete|logodds|samples")
      ->required()
      ->check(CLI::IsMember(
          {"correlations", "regression", "discrete", "logodds", "samples"}));

  auto* fit = app.add_subcommand("fit", "Fit the full three-block model");
  std::string outcome, method, model_out;
  fit->add_option("--outcome", outcome, "satisfaction or likeness");
  fit->add_option("--method", method, "emoticon, lexicon or contextual");
  fit->add_option("--model", model_out, "Model file (default <out>/model_<outcome>_<method>.json)");

  auto* predict = app.add_subcommand("predict", "Apply a fitted model to the configured inputs");
  std::string model_in, predict_out;
  predict->add_option("--model", model_in, "Model file")->required();
  predict->add_option("--write", predict_out, "Predictions CSV (default <out>/predictions.csv)");

  auto* report = app.add_subcommand("report", "Every table plus a combined report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const auto config = ov.Build();
    if (*ingest) {
      const auto corpus = pipeline::IngestConfigured(config);
      const fs::path out =
          ingest_out.empty() ? config.output_dir / "corpus.jsonl" : fs::path(ingest_out);
      std::ostringstream text;
      corpus::WriteCanonical(corpus, text);
      WriteText(out, text.str());
      std::cout << "dialogues " << corpus.report.dialogues << ", utterances "
                << corpus.report.utterances << ", participant rows "
                << corpus.report.participant_rows << ", skipped messages "
                << corpus.report.skipped_messages << "\n";
      PrintWritten({out});
      return 0;
    }

    const auto ws = pipeline::Workspace::Load(config);
    if (*extract) {
      if (!scorer_input.empty()) {
        std::ostringstream text;
        affect::WriteScorerInput(ws.corpus, ws.emoticons, text);
        WriteText(scorer_input, text.str());
        PrintWritten({scorer_input});
      }
      PrintWritten(pipeline::Emit(
          ws, {pipeline::ProfilesTable(ws), pipeline::PrevalenceTable(ws)}));
    } else if (*analyze) {
      std::vector<pipeline::Table> tables;
      if (kind == "correlations") {
        tables = {pipeline::CorrelationsTable(ws), pipeline::CrossMethodTable(ws)};
      } else if (kind == "regression") {
        tables = {pipeline::RegressionTable(ws)};
      } else if (kind == "discrete") {
        tables = {pipeline::DiscreteTable(ws)};
      } else if (kind == "logodds") {
        tables = {pipeline::LogOddsTable(ws)};
      } else {
        tables = {pipeline::SamplesTable(ws)};
      }
      PrintWritten(pipeline::Emit(ws, tables));
    } else if (*fit) {
      const std::string o = outcome.empty() ? config.fit_outcome : outcome;
      lexcorr::Method m = config.fit_method;
      if (!method.empty()) {
        const auto parsed = lexcorr::ParseMethod(method);
        if (!parsed) throw ValidationError("unknown method \"" + method + "\"");
        m = *parsed;
      }
      const auto result = pipeline::Fit(ws, o, m);
      const fs::path out =
          model_out.empty()
              ? config.output_dir / ("model_" + o + "_" +
                                     std::string(lexcorr::MethodName(m)) + ".json")
              : fs::path(model_out);
      result.model.Save(out);
      std::cout << "n " << result.model.training_n << ", R2 "
                << result.model.training_r2 << "\n";
      PrintWritten({out});
    } else if (*predict) {
      const auto model = pipeline::FittedPredictor::Load(model_in);
      auto table = pipeline::PredictionsTable(pipeline::Predict(model, ws));
      table.comments = {"corpus_sha256=" + ws.corpus_hash,
                        "config_sha256=" + ws.config_hash,
                        "model_corpus_sha256=" + model.corpus_hash,
                        "model_config_sha256=" + model.config_hash};
      const fs::path out =
          predict_out.empty() ? config.output_dir / "predictions.csv" : fs::path(predict_out);
      std::ostringstream text;
      pipeline::WriteCsv(table, text);
      WriteText(out, text.str());
      PrintWritten({out});
    } else if (*report) {
      PrintWritten(pipeline::RunReport(ws));
    }
    return 0;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
