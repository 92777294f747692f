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

#include <cmath>
#include <regex>
#include <sstream>

#include "doctest.h"
#include "negaffect/pipeline.hpp"
#include "test_support.hpp"

using namespace negaffect;
using namespace negaffect::pipeline;
using lexcorr::Method;
using negaffect::testing::DataPath;
using negaffect::testing::ReadText;
using negaffect::testing::TempDir;
using negaffect::testing::WriteText;

namespace {

RunConfig FixtureConfig() {
  return RunConfig::Load(DataPath("tests/data/fixture_config.json"));
}

// A synthetic corpus with scores, the bundled lexicon and the
// demographic exclusion rules.
struct SyntheticRun {
  TempDir dir{"pipeline"};
  RunConfig config;
  Workspace ws;

  explicit SyntheticRun(std::size_t dialogues = 300, std::uint64_t seed = 11) {
    auto corpus = negaffect::testing::SyntheticCorpus(dialogues, seed);
    WriteText(dir / "scores.jsonl",
              negaffect::testing::SyntheticScoresJsonl(corpus, seed + 1));
    config.emoticons_path = DataPath("data/emoticons.json");
    config.lexicon_path = DataPath("data/lexicon/open_affect.lex");
    config.exclusions_path = DataPath("data/config/exclusions_demographic.json");
    config.scores_path = dir / "scores.jsonl";
    config.output_dir = dir / "out";
    ws = Workspace::FromCorpus(config, std::move(corpus));
  }
};

SyntheticRun& Shared() {
  static SyntheticRun run;
  return run;
}

std::vector<std::string> Column(const Table& t, std::string_view name) {
  std::size_t idx = t.header.size();
  for (std::size_t i = 0; i < t.header.size(); ++i) {
    if (t.header[i] == name) idx = i;
  }
  REQUIRE(idx < t.header.size());
  std::vector<std::string> out;
  for (const auto& row : t.rows) out.push_back(row[idx]);
  return out;
}

}  // namespace

TEST_SUITE("pipeline") {
  TEST_CASE("config resolves paths relative to its file") {
    const auto c = FixtureConfig();
    CHECK(c.corpus_path == DataPath("tests/data/fixture_corpus.jsonl"));
    CHECK(c.alpha0 == 10.0);
    CHECK(c.top_k == 3);
    CHECK(c.t_test == "unequal");
    CHECK(c.individual_block == DefaultIndividualBlock());
  }

  TEST_CASE("config rejects bad input") {
    const std::filesystem::path base = "/tmp";
    CHECK_THROWS_WITH_AS(RunConfig::FromJsonText(R"({"alpha":1})", base),
                         doctest::Contains("alpha"), ValidationError);
    CHECK_THROWS_AS(RunConfig::FromJsonText(R"({"alpha0":0})", base),
                    ValidationError);
    CHECK_THROWS_AS(RunConfig::FromJsonText(R"({"t_test":"welch2"})", base),
                    ValidationError);
    CHECK_THROWS_AS(RunConfig::FromJsonText(R"({"methods":["liwc"]})", base),
                    ValidationError);
    CHECK_THROWS_AS(RunConfig::FromJsonText(R"({"tie_policy":"coin"})", base),
                    ValidationError);
    CHECK_THROWS_AS(
        RunConfig::FromJsonText(R"({"individual_block":["shoe_size"]})", base),
        ValidationError);
    CHECK_THROWS_AS(RunConfig::FromJsonText(
                        R"({"categorical":{"gender":{"reference":"Robot"}}})",
                        base),
                    ValidationError);
    CHECK_THROWS_AS(RunConfig::FromJsonText("{", base), ValidationError);
  }

  TEST_CASE("config hash ignores the output location") {
    auto a = FixtureConfig();
    auto b = a;
    b.output_dir = "/elsewhere";
    b.report_formats = {"md"};
    CHECK(a.CanonicalJson() == b.CanonicalJson());
    b.alpha0 = 11;
    CHECK(a.CanonicalJson() != b.CanonicalJson());
  }

  TEST_CASE("missing inputs are I/O errors") {
    auto c = FixtureConfig();
    c.lexicon_path = "/nonexistent.lex";
    CHECK_THROWS_AS(Workspace::Load(c), IoError);
    auto d = FixtureConfig();
    d.corpus_path = "/nonexistent.jsonl";
    CHECK_THROWS_AS(Workspace::Load(d), IoError);
  }

  TEST_CASE("encoding uses observed levels and the modal reference") {
    const auto ws = Workspace::Load(FixtureConfig());
    const auto enc = BuildEncoding(ws.corpus, {});
    CHECK(enc.at("gender").levels == std::vector<std::string>{"Female", "Male"});
    CHECK(enc.at("svo").levels.size() == 2);
    const auto block = ExpandBlock({"age", "gender", "svo"}, enc);
    REQUIRE(block.size() == 3);
    CHECK(block[0] == "age");
    CHECK(block[1].rfind("gender=", 0) == 0);
    CHECK(block[2].rfind("svo=", 0) == 0);

    std::map<std::string, CategoricalOverride> ov;
    ov["gender"].reference = "Male";
    const auto enc2 = BuildEncoding(ws.corpus, ov);
    CHECK(ExpandBlock({"gender"}, enc2) == std::vector<std::string>{"gender=Female"});
  }

  TEST_CASE("analysis table pairs each participant with the partner") {
    const auto ws = Workspace::Load(FixtureConfig());
    const auto t = BuildAnalysisTable(ws.corpus, ws.profiles,
                                      BuildEncoding(ws.corpus, {}));
    REQUIRE(t.rows.size() == 4);
    CHECK(t.ids[0] == stats::RowId{"d1", 0});
    CHECK(t.ids[3] == stats::RowId{"d2", 1});
    const auto self_joy = t.ColumnIndex("self.emoticon.joy");
    const auto partner_joy = t.ColumnIndex("partner.emoticon.joy");
    CHECK(t.rows[0][self_joy] == 3.0);
    CHECK(t.rows[1][partner_joy] == 3.0);
    CHECK(t.rows[0][partner_joy] == 0.0);
    const auto anx = t.ColumnIndex("self.lexicon.anxiety");
    CHECK(t.rows[3][anx] == 2.0);
    const auto fear = t.ColumnIndex("self.contextual.fear");
    CHECK(*t.rows[1][fear] == doctest::Approx(0.625).epsilon(1e-12));
  }

  TEST_CASE("regression degrees of freedom follow the block layout") {
    auto& run = Shared();
    const auto enc = BuildEncoding(run.ws.corpus, run.config.categorical);
    const auto table = BuildAnalysisTable(run.ws.corpus, run.ws.profiles, enc);
    struct Expect {
      Method method;
      std::size_t k[3];
    };
    for (const auto& e : {Expect{Method::kEmoticon, {14, 18, 22}},
                          Expect{Method::kLexicon, {14, 18, 22}},
                          Expect{Method::kContextual, {14, 20, 26}}}) {
      CAPTURE(lexcorr::MethodName(e.method));
      const auto blocks = ConfiguredBlocks(run.ws, enc, e.method);
      for (const char* outcome : {"satisfaction", "likeness"}) {
        const auto r = stats::HierarchicalFit(table, blocks, outcome);
        REQUIRE(r.steps.size() == 3);
        for (int s = 0; s < 3; ++s) {
          CHECK(r.steps[s].df_model == e.k[s]);
          CHECK(r.steps[s].df_residual == r.n - e.k[s] - 1);
        }
        CHECK(r.changes[0].df1 == e.k[1] - e.k[0]);
        CHECK(r.changes[1].df2 == r.n - e.k[2] - 1);
      }
    }
  }

  TEST_CASE("the choice of reference level leaves R2 and F unchanged") {
    auto& run = Shared();
    const auto base = BuildEncoding(run.ws.corpus, {});
    std::map<std::string, CategoricalOverride> ov;
    for (const auto& [var, spec] : base) {
      REQUIRE(spec.levels.size() >= 2);
      ov[var].reference =
          spec.reference == spec.levels.front() ? spec.levels.back() : spec.levels.front();
    }
    const auto flipped = BuildEncoding(run.ws.corpus, ov);
    CHECK(flipped.at("gender").reference != base.at("gender").reference);
    const auto t1 = BuildAnalysisTable(run.ws.corpus, run.ws.profiles, base);
    const auto t2 = BuildAnalysisTable(run.ws.corpus, run.ws.profiles, flipped);
    for (Method m : lexcorr::kAllMethods) {
      const auto r1 = stats::HierarchicalFit(
          t1, RegressionBlocks(DefaultIndividualBlock(), base, m), "satisfaction");
      const auto r2 = stats::HierarchicalFit(
          t2, RegressionBlocks(DefaultIndividualBlock(), flipped, m), "satisfaction");
      REQUIRE(r1.steps.size() == r2.steps.size());
      for (std::size_t s = 0; s < r1.steps.size(); ++s) {
        CHECK(r1.steps[s].r2 == doctest::Approx(r2.steps[s].r2).epsilon(1e-10));
        CHECK(r1.steps[s].f == doctest::Approx(r2.steps[s].f).epsilon(1e-10));
      }
      CHECK(r1.changes.back().f_change ==
            doctest::Approx(r2.changes.back().f_change).epsilon(1e-9));
    }
  }

  TEST_CASE("outcome points of both parties can enter as controls") {
    auto& run = Shared();
    const auto enc = BuildEncoding(run.ws.corpus, {});
    const auto table = BuildAnalysisTable(run.ws.corpus, run.ws.profiles, enc);
    const auto own = table.ColumnIndex("points");
    const auto other = table.ColumnIndex("partner.points");
    CHECK(table.rows[0][own] == table.rows[1][other]);
    CHECK(table.rows[1][own] == table.rows[0][other]);
    auto control = ExpandBlock(DefaultIndividualBlock(), enc);
    control.push_back("points");
    control.push_back("partner.points");
    const auto r = stats::HierarchicalFit(
        table, {control, AffectColumns(Method::kLexicon, "self")}, "likeness");
    CHECK(r.steps[0].df_model == 16);
    CHECK_NOTHROW(RunConfig::FromJsonText(
        R"({"individual_block":["age","points","partner.points"]})", "/tmp"));
  }

  TEST_CASE("contextual blocks require a score file") {
    auto c = FixtureConfig();
    c.scores_path.clear();
    const auto ws = Workspace::Load(c);
    const auto enc = BuildEncoding(ws.corpus, {});
    CHECK_NOTHROW(ConfiguredBlocks(ws, enc, Method::kLexicon));
    CHECK_THROWS_AS(ConfiguredBlocks(ws, enc, Method::kContextual),
                    ValidationError);
  }

  TEST_CASE("an empty affect block adds nothing") {
    auto& run = Shared();
    const auto enc = BuildEncoding(run.ws.corpus, {});
    const auto table = BuildAnalysisTable(run.ws.corpus, run.ws.profiles, enc);
    const auto individual = ExpandBlock(DefaultIndividualBlock(), enc);
    const auto r = stats::HierarchicalFit(
        table, {individual, {}, AffectColumns(Method::kLexicon, "partner")},
        "satisfaction");
    CHECK(r.changes[0].delta_r2 == 0.0);
    CHECK(r.changes[0].f_change == 0.0);
    CHECK(r.steps[1].r2 == r.steps[0].r2);
  }

  TEST_CASE("fit then predict reproduces fitted values") {
    auto& run = Shared();
    for (Method m : lexcorr::kAllMethods) {
      const auto out = Fit(run.ws, "likeness", m);
      const auto preds = Predict(out.model, out.table);
      const auto& fit = out.stepwise.steps.back();
      std::size_t j = 0;
      const auto y = out.table.ColumnIndex("likeness");
      for (std::size_t i = 0; i < preds.size(); ++i) {
        if (!preds[i].value || !out.table.rows[i][y]) continue;
        REQUIRE(j < fit.fitted.size());
        CHECK(*preds[i].value == fit.fitted[j]);
        ++j;
      }
      CHECK(j == fit.fitted.size());
      CHECK(out.model.training_n == fit.n);
      CHECK(out.model.predictor_names == fit.predictor_names);
    }
  }

  TEST_CASE("model files round-trip") {
    auto& run = Shared();
    const auto out = Fit(run.ws, "satisfaction", Method::kContextual);
    const auto path = run.dir / "model.json";
    out.model.Save(path);
    const auto back = FittedPredictor::Load(path);
    CHECK(back.predictor_names == out.model.predictor_names);
    CHECK(back.coefficients == out.model.coefficients);
    CHECK(back.encoding == out.model.encoding);
    CHECK(back.config_hash == run.ws.config_hash);
    CHECK(back.corpus_hash == run.ws.corpus_hash);
    CHECK(back.ToJson() == out.model.ToJson());
    CHECK_THROWS_AS(FittedPredictor::FromJsonText(R"({"schema_version":2})"),
                    ValidationError);
  }

  TEST_CASE("a constant model predicts its intercept") {
    auto& run = Shared();
    auto model = Fit(run.ws, "satisfaction", Method::kEmoticon).model;
    std::fill(model.coefficients.begin(), model.coefficients.end(), 0.0);
    model.coefficients[0] = 4.0;
    for (const auto& p : Predict(model, run.ws)) {
      if (!p.value) continue;
      CHECK(*p.value == 4.0);
      CHECK(p.clamped == 4.0);
      CHECK_FALSE(p.out_of_range);
    }
    model.coefficients[0] = 7.5;
    const auto high = Predict(model, run.ws);
    CHECK(high.front().clamped == 5.0);
    CHECK(high.front().out_of_range);
  }

  TEST_CASE("predicting with unknown predictors names them") {
    auto& run = Shared();
    auto model = Fit(run.ws, "satisfaction", Method::kEmoticon).model;
    model.predictor_names.push_back("self.emoticon.confusion");
    model.coefficients.push_back(1.0);
    CHECK_THROWS_WITH_AS(Predict(model, run.ws),
                         doctest::Contains("self.emoticon.confusion"),
                         ValidationError);
  }

  TEST_CASE("significance stars agree with p in every table") {
    auto& run = Shared();
    const std::vector<std::pair<Table, std::vector<std::pair<std::string, std::string>>>>
        checks{{CorrelationsTable(run.ws),
                {{"p_satisfaction", "stars_satisfaction"},
                 {"p_likeness", "stars_likeness"}}},
               {CrossMethodTable(run.ws), {{"p", "stars"}}},
               {RegressionTable(run.ws),
                {{"p", "stars"}, {"change_p", "change_stars"}}},
               {DiscreteTable(run.ws), {{"p", "stars"}}}};
    std::size_t seen = 0;
    for (const auto& [table, pairs] : checks) {
      CAPTURE(table.name);
      for (const auto& [pcol, scol] : pairs) {
        const auto ps = Column(table, pcol);
        const auto ss = Column(table, scol);
        for (std::size_t i = 0; i < ps.size(); ++i) {
          if (ps[i].empty()) {
            CHECK(ss[i].empty());
            continue;
          }
          CHECK(ss[i] == stats::Stars(std::stod(ps[i])));
          ++seen;
        }
      }
    }
    CHECK(seen > 100);
  }

  TEST_CASE("regression table carries every method, outcome and step") {
    auto& run = Shared();
    const auto t = RegressionTable(run.ws);
    CHECK(t.rows.size() == 3 * 2 * 3);
    for (const auto& n : t.notes) CHECK(n.find("listwise") != std::string::npos);
    const auto change = Column(t, "f_change");
    const auto steps = Column(t, "step");
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      CHECK(change[i].empty() == (steps[i] == "1"));
    }
  }

  TEST_CASE("discrete tests skip single-group comparisons") {
    auto ws = Workspace::Load(FixtureConfig());
    for (auto& d : ws.corpus.dialogues) {
      for (auto& p : d.participants) p.gender = corpus::Gender::kFemale;
    }
    const auto t = DiscreteTable(ws);
    bool noted = false;
    for (const auto& n : t.notes) {
      if (n.find("gender") != std::string::npos) noted = true;
    }
    CHECK(noted);
    for (const auto& row : t.rows) CHECK(row[0] != "gender");
  }

  TEST_CASE("log-odds table notes empty categories") {
    const auto ws = Workspace::Load(FixtureConfig());
    const auto t = LogOddsTable(ws);
    bool comment = false;
    for (const auto& c : t.comments) {
      if (c.find("alpha0=10") != std::string::npos) comment = true;
    }
    CHECK(comment);
    CHECK_FALSE(t.notes.empty());
    CHECK(t.rows.size() > 0);
  }

  TEST_CASE("csv and markdown writers") {
    Table t;
    t.name = "demo";
    t.title = "Demo";
    t.comments = {"k=v"};
    t.header = {"a", "b"};
    t.rows = {{"1", "x,y"}, {"22", "say \"hi\""}};
    t.notes = {"note one"};
    std::ostringstream csv;
    WriteCsv(t, csv);
    CHECK(csv.str() ==
          "# k=v\n# note: note one\na,b\n1,\"x,y\"\n22,\"say \"\"hi\"\"\"\n");
    std::ostringstream md;
    WriteMarkdown(t, md);
    CHECK(md.str().find("| 22  | say \"hi\" |") != std::string::npos);
    CHECK(md.str().find("note one") != std::string::npos);
  }

  TEST_CASE("reports are byte-identical across runs and directories") {
    auto config = FixtureConfig();
    TempDir a("report_a");
    TempDir b("report_b");
    config.output_dir = a.path();
    const auto files_a = RunReport(Workspace::Load(config));
    config.output_dir = b.path();
    const auto files_b = RunReport(Workspace::Load(config));
    REQUIRE(files_a.size() == files_b.size());
    REQUIRE(files_a.size() > 8);
    for (std::size_t i = 0; i < files_a.size(); ++i) {
      CAPTURE(files_a[i].string());
      CHECK(files_a[i].filename() == files_b[i].filename());
      CHECK(ReadText(files_a[i]) == ReadText(files_b[i]));
    }
    const auto csv = ReadText(a / "correlations.csv");
    CHECK(std::regex_search(csv, std::regex("^# corpus_sha256=[0-9a-f]{64}\n")));
    CHECK(csv.find("# config_sha256=") != std::string::npos);
  }
}
