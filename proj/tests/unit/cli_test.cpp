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

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "negaffect/corpus.hpp"
#include "test_support.hpp"

using negaffect::testing::DataPath;
using negaffect::testing::ReadText;
using negaffect::testing::TempDir;
using negaffect::testing::WriteText;

namespace {

int Run(const std::string& args, const TempDir& dir) {
  const std::string cmd = std::string("\"") + NEGAFFECT_CLI + "\" " + args +
                          " > \"" + (dir / "stdout.txt").string() + "\" 2> \"" +
                          (dir / "stderr.txt").string() + "\"";
  const int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

std::string FixtureArgs(const TempDir& dir) {
  return "--config \"" + DataPath("tests/data/fixture_config.json").string() +
         "\" --out \"" + (dir / "out").string() + "\"";
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("help and usage errors") {
    TempDir dir("cli_usage");
    CHECK(Run("--help", dir) == 0);
    CHECK(ReadText(dir / "stdout.txt").find("report") != std::string::npos);
    CHECK(Run("", dir) == 1);
    CHECK(Run("analyze everything", dir) == 1);
    CHECK(Run("report --bogus", dir) == 1);
  }

  TEST_CASE("report writes every table") {
    TempDir dir("cli_report");
    REQUIRE(Run(FixtureArgs(dir) + " report", dir) == 0);
    for (const char* name :
         {"profiles.csv", "prevalence.md", "correlations.csv", "cross_method.csv",
          "regression.csv", "discrete.csv", "logodds.csv", "samples.csv",
          "report.md"}) {
      CAPTURE(name);
      CHECK(std::filesystem::exists(dir / "out" / name));
    }
  }

  TEST_CASE("extract writes the scorer input") {
    TempDir dir("cli_extract");
    const auto input = dir / "scorer_input.jsonl";
    REQUIRE(Run(FixtureArgs(dir) + " extract --scorer-input \"" + input.string() +
                    "\"",
                dir) == 0);
    const auto text = ReadText(input);
    std::istringstream lines(text);
    std::string line;
    std::size_t n = 0;
    while (std::getline(lines, line)) {
      CHECK(line.find("\"utterance_id\"") != std::string::npos);
      ++n;
    }
    CHECK(n == 8);
    CHECK(text.find(":)") == std::string::npos);
    CHECK(std::filesystem::exists(dir / "out" / "profiles.csv"));
  }

  TEST_CASE("ingest normalizes the release format") {
    TempDir dir("cli_ingest");
    const auto out = dir / "canonical.jsonl";
    REQUIRE(Run("--corpus \"" + DataPath("tests/data/release_sample.json").string() +
                    "\" --corpus-format release ingest --write \"" +
                    out.string() + "\"",
                dir) == 0);
    CHECK(ReadText(dir / "stdout.txt").find("skipped messages 3") !=
          std::string::npos);
    CHECK(negaffect::corpus::IngestCanonical(out).dialogues.size() == 2);
  }

  TEST_CASE("fit and predict round trip") {
    TempDir dir("cli_fit");
    std::ostringstream corpus;
    negaffect::corpus::WriteCanonical(negaffect::testing::SyntheticCorpus(200, 5),
                                      corpus);
    WriteText(dir / "corpus.jsonl", corpus.str());
    const std::string args =
        "--corpus \"" + (dir / "corpus.jsonl").string() + "\" --lexicon \"" +
        DataPath("data/lexicon/open_affect.lex").string() + "\" --emoticons \"" +
        DataPath("data/emoticons.json").string() + "\" --out \"" +
        (dir / "out").string() + "\"";
    REQUIRE(Run(args + " fit --outcome likeness --method lexicon", dir) == 0);
    const auto model = dir / "out" / "model_likeness_lexicon.json";
    REQUIRE(std::filesystem::exists(model));
    REQUIRE(Run(args + " predict --model \"" + model.string() + "\"", dir) == 0);
    const auto preds = ReadText(dir / "out" / "predictions.csv");
    CHECK(preds.find("# corpus_sha256=") == 0);
    // Contextual fits need scores.
    CHECK(Run(args + " fit --method contextual", dir) == 1);
  }

  TEST_CASE("exit codes distinguish validation and I/O failures") {
    TempDir dir("cli_errors");
    CHECK(Run("--corpus /nonexistent/c.jsonl ingest", dir) == 2);
    CHECK(Run(FixtureArgs(dir) + " --lexicon /nonexistent.lex report", dir) == 2);
    CHECK(Run(FixtureArgs(dir) + " --alpha0 -1 report", dir) == 1);
    WriteText(dir / "bad.jsonl", "{\"dialogue_id\": 5}\n");
    CHECK(Run("--corpus \"" + (dir / "bad.jsonl").string() + "\" ingest", dir) == 1);
    CHECK(ReadText(dir / "stderr.txt").find("error:") != std::string::npos);
    // Four rows cannot support the three-block model.
    CHECK(Run(FixtureArgs(dir) + " fit", dir) == 1);
  }
}
