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

#include <sstream>

#include "doctest.h"
#include "negaffect/corpus.hpp"
#include "test_support.hpp"

using namespace negaffect;
using namespace negaffect::corpus;
using negaffect::testing::DataPath;
using negaffect::testing::ReadText;

namespace {

std::string Line(std::string_view participant0_extra = "") {
  std::string p0 =
      R"({"participant_id":"a","age":30,"education":5,"gender":"Female",)"
      R"("ethnicity":"White American","svo":"Prosocial",)"
      R"("big5":{"extraversion":4,"agreeableness":5,"conscientiousness":6,)"
      R"("emotional_stability":3,"openness":5},)"
      R"("priorities":{"Food":"High","Water":"Medium","Firewood":"Low"},)"
      R"("satisfaction":4,"likeness":5)";
  p0 += participant0_extra;
  p0 += "}";
  const std::string p1 =
      R"({"participant_id":"b","age":40,"gender":"Male",)"
      R"("ethnicity":"Asian American","svo":"Proself",)"
      R"("big5":{"extraversion":4,"agreeableness":5,"conscientiousness":6,)"
      R"("emotional_stability":3,"openness":5},)"
      R"("priorities":{"Food":"Low","Water":"High","Firewood":"Medium"}})";
  return R"({"dialogue_id":"x","utterances":[{"id":"x_0","speaker":0,"text":"hi"},)"
         R"({"id":"x_1","speaker":1,"text":"hello"}],"participants":[)" +
         p0 + "," + p1 + "]}";
}

Corpus ParseText(const std::string& text) {
  std::istringstream in(text);
  return ParseCanonical(in, "test");
}

}  // namespace

TEST_SUITE("corpus") {
  TEST_CASE("canonical fixture loads with the expected shape") {
    const auto c = IngestCanonical(DataPath("tests/data/fixture_corpus.jsonl"));
    REQUIRE(c.dialogues.size() == 2);
    CHECK(c.report.utterances == 8);
    CHECK(c.report.participant_rows == 4);
    CHECK(c.dialogues[0].utterances[3].text == "No way >:( that's unfair, I'm so mad");
    CHECK(c.dialogues[1].participants[1].ethnicity.value() ==
          Ethnicity::kHispanicOrLatino);
    CHECK(c.provenance.source_format == "canonical");
    CHECK(c.provenance.satisfaction_question ==
          "How satisfied are you with the negotiation outcome?");
  }

  TEST_CASE("canonical write then parse round-trips") {
    const auto c = IngestCanonical(DataPath("tests/data/fixture_corpus.jsonl"));
    std::ostringstream out;
    WriteCanonical(c, out);
    const auto again = ParseText(out.str());
    CHECK(again == c);
    std::ostringstream out2;
    WriteCanonical(again, out2);
    CHECK(out2.str() == out.str());
  }

  TEST_CASE("synthetic corpora round-trip") {
    const auto c = negaffect::testing::SyntheticCorpus(40, 3);
    std::ostringstream out;
    WriteCanonical(c, out);
    CHECK(ParseText(out.str()) == c);
  }

  TEST_CASE("optional fields may be absent") {
    const auto c = ParseText(Line());
    const auto& b = c.dialogues[0].participants[1];
    CHECK_FALSE(b.education.present());
    CHECK_FALSE(b.satisfaction.present());
    CHECK(b.satisfaction.presence() == Presence::kMissing);
  }

  TEST_CASE("schema violations name the dialogue and field") {
    SUBCASE("out of range likert") {
      auto text = Line();
      text.replace(text.find("\"satisfaction\":4"), 16, "\"satisfaction\":6");
      CHECK_THROWS_WITH_AS(ParseText(text),
                           doctest::Contains("participants[0].satisfaction"),
                           ValidationError);
    }
    SUBCASE("unknown field") {
      CHECK_THROWS_WITH_AS(ParseText(Line(R"(,"mood":"fine")")),
                           doctest::Contains("mood"), ValidationError);
    }
    SUBCASE("bad priority permutation") {
      auto text = Line();
      text.replace(text.find("\"Water\":\"Medium\""), 16, "\"Water\":\"High\"  ");
      CHECK_THROWS_WITH_AS(ParseText(text), doctest::Contains("permutation"),
                           ValidationError);
    }
    SUBCASE("blank utterance") {
      auto text = Line();
      text.replace(text.find("\"text\":\"hi\""), 11, "\"text\":\"  \"");
      CHECK_THROWS_WITH_AS(ParseText(text), doctest::Contains("dialogue x"),
                           ValidationError);
    }
    SUBCASE("speaker outside 0/1") {
      auto text = Line();
      text.replace(text.find("\"speaker\":1"), 11, "\"speaker\":2");
      CHECK_THROWS_AS(ParseText(text), ValidationError);
    }
    SUBCASE("malformed json reports the line") {
      CHECK_THROWS_WITH_AS(ParseText(Line() + "\n{oops"),
                           doctest::Contains("line 2"), ValidationError);
    }
    SUBCASE("duplicate dialogue id") {
      CHECK_THROWS_WITH_AS(ParseText(Line() + "\n" + Line()),
                           doctest::Contains("duplicate"), ValidationError);
    }
  }

  TEST_CASE("missing corpus file is an I/O error") {
    CHECK_THROWS_AS(IngestCanonical("/nonexistent/corpus.jsonl"), IoError);
  }

  TEST_CASE("release adapter maps the public format") {
    const auto c = IngestReleaseAdapter(DataPath("tests/data/release_sample.json"));
    REQUIRE(c.dialogues.size() == 2);
    CHECK(c.provenance.source_format == "release");
    CHECK(c.report.skipped_messages == 3);
    const auto& d0 = c.dialogues[0];
    CHECK(d0.dialogue_id == "0");
    REQUIRE(d0.utterances.size() == 2);
    CHECK(d0.utterances[0].id == "0_0");
    CHECK(d0.utterances[1].speaker == 1);
    const auto& a1 = d0.participants[0];
    CHECK(a1.participant_id == "0_agent1");
    CHECK(a1.satisfaction.value() == 5);
    CHECK(a1.likeness.value() == 4);
    CHECK(a1.education.value() == 5);
    CHECK(a1.gender.value() == Gender::kFemale);
    CHECK(a1.points.value() == 32.0);
    CHECK(a1.priorities[static_cast<int>(Issue::kFood)] == PriorityLevel::kHigh);
    const auto& a2 = d0.participants[1];
    CHECK(a2.age.value() == 3);
    CHECK(a2.education.value() == 3);
    CHECK(a2.satisfaction.value() == 2);
    CHECK(a2.likeness.value() == 3);
    CHECK(a2.svo.value() == Svo::kProself);
    const auto& d1 = c.dialogues[1];
    CHECK(d1.participants[0].gender.value() == Gender::kOther);
    CHECK(d1.participants[0].svo.value() == Svo::kUnclassified);
    CHECK(d1.participants[0].education.value() == 6);
    CHECK(d1.participants[1].education.value() == 1);
    CHECK(d1.participants[1].big5.openness.value() == 6.0);
  }

  TEST_CASE("release and canonical ingestion agree on content") {
    const auto rel = IngestReleaseAdapter(DataPath("tests/data/release_sample.json"));
    std::ostringstream out;
    WriteCanonical(rel, out);
    auto canon = ParseText(out.str());
    CHECK(canon.dialogues == rel.dialogues);
  }

  TEST_CASE("release adapter rejects bad input") {
    CHECK_THROWS_AS(ParseRelease("", "x"), ValidationError);
    CHECK_THROWS_AS(ParseRelease("[]", "x"), ValidationError);
    CHECK_THROWS_AS(ParseRelease("{}", "x"), ValidationError);
    auto text = ReadText(DataPath("tests/data/release_sample.json"));
    text.replace(text.find("\"annotations\""), 13, "\"surprise_key\"");
    CHECK_THROWS_WITH_AS(ParseRelease(text, "x"),
                         doctest::Contains("unrecognized key \"surprise_key\""),
                         ValidationError);
  }

  TEST_CASE("education strings map to ordinals") {
    CHECK(EducationOrdinal("Doctoral degree") == 8);
    CHECK(EducationOrdinal("Professional degree (JD, MD)") == 7);
    CHECK(EducationOrdinal("Master's degree") == 6);
    CHECK(EducationOrdinal("4 year college degree") == 5);
    CHECK(EducationOrdinal("Bachelor's degree") == 5);
    CHECK(EducationOrdinal("2 year college degree") == 4);
    CHECK(EducationOrdinal("Some 4 year college, no degree") == 3);
    CHECK(EducationOrdinal("Some 2 year college, no degree") == 3);
    CHECK(EducationOrdinal("Trade school") == 3);
    CHECK(EducationOrdinal(
              "High school graduate (high school diploma or equivalent "
              "including GED)") == 2);
    CHECK(EducationOrdinal("Some high school, no diploma") == 1);
    CHECK(EducationOrdinal("Less than high school") == 0);
    CHECK_FALSE(EducationOrdinal("prefer not to say").has_value());
  }

  TEST_CASE("default exclusion policy flags implausible ages only") {
    const auto c = IngestReleaseAdapter(DataPath("tests/data/release_sample.json"));
    const auto r = ApplyExclusions(c, ExclusionPolicy::Default());
    REQUIRE(r.report.size() == 1);
    CHECK(r.report[0].participant_id == "0_agent2");
    CHECK(r.report[0].variable == "age");
    CHECK(r.report[0].value == "3");
    const auto& p = r.corpus.dialogues[0].participants[1];
    CHECK(p.age.presence() == Presence::kExcluded);
    CHECK(p.age.raw() == 3);
    // Nothing is dropped.
    CHECK(r.corpus.dialogues.size() == c.dialogues.size());
    CHECK(r.corpus.dialogues[0].utterances == c.dialogues[0].utterances);
  }

  TEST_CASE("exclusion policy file applies categorical rules") {
    const auto c = IngestReleaseAdapter(DataPath("tests/data/release_sample.json"));
    const auto policy =
        ExclusionPolicy::Load(DataPath("data/config/exclusions_demographic.json"));
    const auto r = ApplyExclusions(c, policy);
    CHECK(r.report.size() == 3);
    const auto& p = r.corpus.dialogues[1].participants[0];
    CHECK(p.gender.presence() == Presence::kExcluded);
    CHECK(p.svo.presence() == Presence::kExcluded);
    CHECK(p.age.present());
  }

  TEST_CASE("exclusion policy validation") {
    CHECK_THROWS_AS(ExclusionPolicy::FromJsonText("{}"), ValidationError);
    CHECK_THROWS_AS(ExclusionPolicy::FromJsonText(
                        R"({"rules":[{"variable":"age","op":"~","value":1}]})"),
                    ValidationError);
    CHECK_THROWS_AS(ExclusionPolicy::FromJsonText(
                        R"({"rules":[{"variable":"svo","op":"<","value":"x"}]})"),
                    ValidationError);
    CHECK_THROWS_WITH_AS(ExclusionPolicy::FromJsonText(
                             R"({"rules":[{"variable":"shoe_size","op":"<","value":1}]})"),
                         doctest::Contains("shoe_size"), ValidationError);
  }
}
