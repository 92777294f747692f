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
#include <sstream>

#include "doctest.h"
#include "negaffect/lexcorr.hpp"
#include "oracle_values.hpp"
#include "test_support.hpp"

using namespace negaffect;
using namespace negaffect::lexcorr;
using negaffect::testing::DataPath;
using negaffect::testing::kLogOddsAlpha0;
using negaffect::testing::kLogOddsOracle;

namespace {

TokenStats ToyStats() {
  TokenStats s;
  s.categories = {"Focal", "Rest"};
  s.totals = {0, 0};
  for (const auto& row : kLogOddsOracle) {
    s.counts[row.token] = {row.focal, row.rest};
    s.totals[0] += row.focal;
    s.totals[1] += row.rest;
    s.background[row.token] = row.focal + row.rest;
    s.background_total += row.focal + row.rest;
  }
  return s;
}

const LogOddsEntry& Find(const std::vector<LogOddsEntry>& v, std::string_view t) {
  for (const auto& e : v) {
    if (e.token == t) return e;
  }
  throw std::runtime_error("token not found");
}

double RelErr(double a, double b) {
  return std::fabs(a - b) / std::max(1.0, std::fabs(b));
}

const affect::EmoticonConfig& Emoticons() {
  static const auto cfg =
      affect::EmoticonConfig::Load(DataPath("data/emoticons.json"));
  return cfg;
}

corpus::Corpus MiniCorpus(const std::vector<std::string>& texts) {
  corpus::Corpus c;
  corpus::Dialogue d;
  d.dialogue_id = "m";
  for (std::size_t i = 0; i < texts.size(); ++i) {
    d.utterances.push_back({"m_" + std::to_string(i), static_cast<int>(i % 2),
                            texts[i], static_cast<int>(i)});
  }
  d.participants[0].participant_id = "a";
  d.participants[1].participant_id = "b";
  c.dialogues.push_back(d);
  return c;
}

}  // namespace

TEST_SUITE("lexcorr") {
  TEST_CASE("log-odds matches the direct-formula oracle") {
    const auto entries = LogOddsDirichlet(ToyStats(), 0, kLogOddsAlpha0);
    REQUIRE(entries.size() == 5);
    for (const auto& row : kLogOddsOracle) {
      CAPTURE(row.token);
      const auto& e = Find(entries, row.token);
      CHECK(RelErr(e.delta, row.delta) < 1e-12);
      CHECK(RelErr(e.variance, row.variance) < 1e-12);
      CHECK(RelErr(e.z, row.z) < 1e-12);
    }
    // Ranked by z.
    CHECK(entries[0].token == "apple");
    CHECK(entries[1].token == "elder");
    CHECK(entries.back().token == "cherry");
  }

  TEST_CASE("swapping the groups negates delta and z") {
    const auto a = LogOddsDirichlet(ToyStats(), 0, kLogOddsAlpha0);
    const auto b = LogOddsDirichlet(ToyStats(), 1, kLogOddsAlpha0);
    for (const auto& row : kLogOddsOracle) {
      const auto& ea = Find(a, row.token);
      const auto& eb = Find(b, row.token);
      CHECK(ea.delta == doctest::Approx(-eb.delta).epsilon(1e-12));
      CHECK(ea.variance == doctest::Approx(eb.variance).epsilon(1e-12));
      CHECK(ea.z == doctest::Approx(-eb.z).epsilon(1e-12));
      CHECK(ea.p == doctest::Approx(eb.p).epsilon(1e-12));
    }
  }

  TEST_CASE("a dominant prior shrinks every delta toward zero") {
    double previous = INFINITY;
    for (double alpha0 : {1.0, 10.0, 1e3, 1e6, 1e9}) {
      double worst = 0.0;
      for (const auto& e : LogOddsDirichlet(ToyStats(), 0, alpha0)) {
        worst = std::max(worst, std::fabs(e.delta));
      }
      CHECK(worst < previous);
      previous = worst;
    }
    CHECK(previous < 1e-6);
  }

  TEST_CASE("min_count filters rare tokens") {
    const auto e = LogOddsDirichlet(ToyStats(), 0, kLogOddsAlpha0, 4.0);
    CHECK(e.size() == 4);  // elder has 3
    CHECK_THROWS_AS(LogOddsDirichlet(ToyStats(), 0, 0.0), ValidationError);
  }

  TEST_CASE("top-k keeps the highest z and breaks ties by token") {
    std::vector<LogOddsEntry> v{{"b", "", 0, 0, 1.0, 1}, {"a", "", 0, 0, 1.0, 1},
                                {"c", "", 0, 0, 2.0, 1}, {"d", "", 0, 0, -1.0, 1}};
    const auto top = TopKCorrelates(v, 3);
    REQUIRE(top.size() == 3);
    CHECK(top[0].token == "c");
    CHECK(top[1].token == "a");
    CHECK(top[2].token == "b");
    CHECK(TopKCorrelates(v, 10).size() == 4);
  }

  TEST_CASE("tie policy parsing and resolution") {
    const std::vector<std::string> cats{"Joy", "Sadness", "Anger", "Surprise"};
    const std::vector<double> tie{1, 0, 1, 0};
    CHECK_FALSE(ResolveTie(tie, cats, TiePolicy::Parse("drop")).has_value());
    const auto pr = TiePolicy::Parse("priority:Anger>Joy");
    CHECK(pr.ToString() == "priority:Anger>Joy");
    CHECK(ResolveTie(tie, cats, pr) == 2);
    const auto unlisted = TiePolicy::Parse("priority:Surprise");
    CHECK(ResolveTie(tie, cats, unlisted) == 0);
    CHECK(ResolveTie(std::vector<double>{0, 2, 1, 0}, cats, TiePolicy{}) == 1);
    CHECK_FALSE(ResolveTie(std::vector<double>{0, 0, 0, 0}, cats, pr).has_value());
    CHECK_THROWS_AS(TiePolicy::Parse("random"), ValidationError);
    CHECK_THROWS_AS(TiePolicy::Parse("priority:"), ValidationError);
  }

  TEST_CASE("emoticon labels use the plurality category") {
    const auto c = MiniCorpus({"yay :) :) :(", "hmm :) :(", "nothing here"});
    AffectInputs in{&Emoticons(), nullptr, nullptr};
    const auto l = LabelCorpus(c, Method::kEmoticon, in, TiePolicy{});
    CHECK(l.labels[0].LabelName() == "Joy");
    CHECK(l.labels[0].signal_count == 3);
    CHECK_FALSE(l.labels[1].label.has_value());
    CHECK(l.labels[1].tied);
    CHECK_FALSE(l.labels[1].undetected());
    CHECK(l.labels[2].undetected());
    CHECK(l.ties == 1);
    CHECK(l.unlabeled == 2);
    const auto p = LabelCorpus(c, Method::kEmoticon, in,
                               TiePolicy::Parse("priority:Sadness>Joy"));
    CHECK(p.labels[1].LabelName() == "Sadness");
  }

  TEST_CASE("contextual labels take the argmax") {
    const auto c = MiniCorpus({"so scared", "okay then", ":)"});
    std::istringstream scores(
        R"({"utterance_id":"m_0","scores":{"joy":0.1,"love":0,"sadness":0.1,"fear":0.7,"anger":0.1,"surprise":0},"model_id":"x"})"
        "\n"
        R"({"utterance_id":"m_1","scores":{"joy":0.4,"love":0.4,"sadness":0.1,"fear":0,"anger":0,"surprise":0.1},"model_id":"x"})");
    const auto s = affect::ParseContextualScores(scores, c, Emoticons());
    AffectInputs in{&Emoticons(), nullptr, &s};
    const auto l = LabelCorpus(c, Method::kContextual, in, TiePolicy{});
    CHECK(l.labels[0].LabelName() == "Fear");
    CHECK(l.labels[0].confidence == 0.7);
    CHECK(l.labels[1].LabelName() == "Joy");  // first maximum
    CHECK(l.labels[2].LabelName() == "Unlabeled");
  }

  TEST_CASE("token statistics skip emoticons, punctuation and unlabeled text") {
    const auto c = MiniCorpus({"great deal :) !", "no signal at all", "great :("});
    AffectInputs in{&Emoticons(), nullptr, nullptr};
    const auto l = LabelCorpus(c, Method::kEmoticon, in, TiePolicy{});
    const auto ts = TokenStats::Build(c, l, &Emoticons());
    CHECK(ts.counts.count(":)") == 0);
    CHECK(ts.counts.count("!") == 0);
    CHECK(ts.counts.count("signal") == 0);
    CHECK(ts.counts.at("great") == std::vector<double>{1, 1, 0, 0});
    CHECK(ts.totals == std::vector<double>{2, 1, 0, 0});
    CHECK(ts.background_total == 3);
  }

  TEST_CASE("an empty category has zero log-odds everywhere") {
    const auto c = MiniCorpus({"great deal :)", "fine :("});
    AffectInputs in{&Emoticons(), nullptr, nullptr};
    const auto l = LabelCorpus(c, Method::kEmoticon, in, TiePolicy{});
    const auto ts = TokenStats::Build(c, l, &Emoticons());
    CHECK(ts.totals[2] == 0.0);
    const auto entries = LogOddsDirichlet(ts, 2, kLogOddsAlpha0);
    CHECK_FALSE(entries.empty());
    for (const auto& e : entries) CHECK(std::fabs(e.z) < 1e-12);
  }

  TEST_CASE("confident samples exclude anything other methods detect") {
    const auto c = MiniCorpus(
        {"I will walk away now", "so mad at this", "give me the water",
         "fine take it :("});
    std::istringstream scores(
        R"({"utterance_id":"m_0","scores":{"joy":0,"love":0,"sadness":0,"fear":0,"anger":0.9,"surprise":0.1},"model_id":"x"})"
        "\n"
        R"({"utterance_id":"m_1","scores":{"joy":0,"love":0,"sadness":0,"fear":0,"anger":0.95,"surprise":0.05},"model_id":"x"})"
        "\n"
        R"({"utterance_id":"m_2","scores":{"joy":0,"love":0,"sadness":0,"fear":0,"anger":0.6,"surprise":0.4},"model_id":"x"})"
        "\n"
        R"({"utterance_id":"m_3","scores":{"joy":0,"love":0,"sadness":0,"fear":0,"anger":0.99,"surprise":0.01},"model_id":"x"})");
    const auto s = affect::ParseContextualScores(scores, c, Emoticons());
    const auto lex = affect::Lexicon::FromText("#category:Anger\nmad\n");
    AffectInputs in{&Emoticons(), &lex, &s};
    std::map<Method, Labeling> labelings;
    for (Method m : kAllMethods) {
      labelings[m] = LabelCorpus(c, m, in, TiePolicy{});
    }
    const auto samples = TopConfidentSamples(c, labelings, 4, 5);
    REQUIRE(samples.size() == 2);
    CHECK(samples[0].utterance_id == "m_0");
    CHECK(samples[0].confidence == 0.9);
    CHECK(samples[1].utterance_id == "m_2");
    CHECK(TopConfidentSamples(c, labelings, 4, 1).size() == 1);
    CHECK(TopConfidentSamples(c, labelings, 0, 5).empty());
  }

  TEST_CASE("method names round-trip") {
    for (Method m : kAllMethods) CHECK(ParseMethod(MethodName(m)) == m);
    CHECK_FALSE(ParseMethod("liwc").has_value());
    CHECK(CategoryNames(Method::kLexicon).size() == 4);
    CHECK(CategoryNames(Method::kContextual).size() == 6);
  }
}
