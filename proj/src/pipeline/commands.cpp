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
#include <map>
#include <sstream>

#include "fmt/format.h"
#include "negaffect/pipeline.hpp"

namespace negaffect::pipeline {
namespace {

using lexcorr::Method;

std::string F(double v, int digits = 6) { return fmt::format("{:.{}f}", v, digits); }
std::string P(double p) { return fmt::format("{:.6g}", p); }
std::string S(double p) { return std::string(stats::Stars(p)); }
std::string N(std::size_t n) { return std::to_string(n); }

Table NewTable(const Workspace& ws, std::string name, std::string title) {
  Table t;
  t.name = std::move(name);
  t.title = std::move(title);
  t.comments = {"corpus_sha256=" + ws.corpus_hash,
                "config_sha256=" + ws.config_hash};
  return t;
}

bool Available(const Workspace& ws, Method m) {
  return m != Method::kContextual || ws.scores.has_value();
}

// Pairwise-complete values of two table columns.
std::pair<std::vector<double>, std::vector<double>> Pairs(
    const stats::AnalysisTable& t, std::string_view a, std::string_view b) {
  const auto ia = t.ColumnIndex(a);
  const auto ib = t.ColumnIndex(b);
  std::pair<std::vector<double>, std::vector<double>> out;
  for (const auto& row : t.rows) {
    if (row[ia] && row[ib]) {
      out.first.push_back(*row[ia]);
      out.second.push_back(*row[ib]);
    }
  }
  return out;
}

std::optional<stats::Correlation> TryPearson(const stats::AnalysisTable& t,
                                             std::string_view a,
                                             std::string_view b,
                                             std::vector<std::string>& notes) {
  auto [x, y] = Pairs(t, a, b);
  try {
    return stats::Pearson(x, y);
  } catch (const ValidationError& e) {
    notes.push_back(std::string(a) + " vs " + std::string(b) + ": " + e.what());
    return std::nullopt;
  }
}

stats::AnalysisTable RowsOf(const Workspace& ws) {
  return BuildAnalysisTable(ws.corpus, ws.profiles,
                            BuildEncoding(ws.corpus, ws.config.categorical));
}

std::map<Method, lexcorr::Labeling> LabelAll(const Workspace& ws) {
  std::map<Method, lexcorr::Labeling> out;
  for (Method m : lexcorr::kAllMethods) {
    if (Available(ws, m)) {
      out[m] = lexcorr::LabelCorpus(ws.corpus, m, ws.inputs(),
                                    ws.config.tie_policy);
    }
  }
  return out;
}

void WriteFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace

Table ProfilesTable(const Workspace& ws) {
  Table t = NewTable(ws, "profiles", "Affect profiles");
  t.header = {"dialogue_id", "agent", "participant_id"};
  for (const auto& c : AllAffectColumns("self")) t.header.push_back(c.substr(5));
  for (const auto& p : ws.profiles) {
    std::vector<std::string> row{p.dialogue_id, std::to_string(p.agent),
                                 p.participant_id};
    for (int v : p.emoticon) row.push_back(std::to_string(v));
    for (int v : p.lexicon) row.push_back(std::to_string(v));
    for (double v : p.contextual) {
      row.push_back(p.has_contextual ? fmt::format("{}", v) : "");
    }
    t.rows.push_back(std::move(row));
  }
  if (!ws.scores) t.notes.push_back("contextual columns empty: no score file");
  return t;
}

Table PrevalenceTable(const Workspace& ws) {
  Table t = NewTable(ws, "prevalence", "Affect signal prevalence");
  const auto p = affect::ComputePrevalence(ws.corpus, ws.emoticons, ws.lexicon);
  t.header = {"metric", "value"};
  t.rows = {{"dialogues", N(ws.corpus.dialogues.size())},
            {"utterances", N(p.utterances)},
            {"utterances_with_emoticon", N(p.with_emoticon)},
            {"emoticon_rate", F(p.emoticon_rate())},
            {"utterances_with_joy_emoticon", N(p.with_joy_emoticon)},
            {"joy_share_of_emoticon_utterances", F(p.joy_share())},
            {"utterances_with_emotive_word", N(p.with_emotive_word)},
            {"emotive_word_rate", F(p.emotive_word_rate())},
            {"excluded_values", N(ws.exclusions.size())}};
  for (const auto& e : ws.exclusions) {
    t.notes.push_back("excluded " + e.participant_id + " " + e.variable + "=" +
                      e.value + " (" + e.reason + ")");
  }
  return t;
}

Table CorrelationsTable(const Workspace& ws) {
  Table t = NewTable(ws, "correlations",
                     "Statistics and correlations with outcome variables");
  t.header = {"group",          "variable",     "n",
              "mean",           "std",          "r_satisfaction",
              "p_satisfaction", "stars_satisfaction", "r_likeness",
              "p_likeness",     "stars_likeness"};
  const auto rows = RowsOf(ws);
  std::vector<std::pair<std::string, std::string>> vars;
  for (const char* v : {"age", "education", "extraversion", "agreeableness",
                        "conscientiousness", "emotional_stability", "openness"}) {
    vars.emplace_back("individual", v);
  }
  for (Method m : lexcorr::kAllMethods) {
    if (!Available(ws, m)) {
      t.notes.push_back("contextual variables omitted: no score file");
      continue;
    }
    for (const auto& c : AffectColumns(m, "self")) {
      vars.emplace_back(std::string(lexcorr::MethodName(m)), c);
    }
  }
  vars.emplace_back("outcome", "satisfaction");
  vars.emplace_back("outcome", "likeness");

  for (const auto& [group, var] : vars) {
    std::vector<std::string> row{group, var};
    const auto values = rows.Values(var);
    if (values.size() >= 2) {
      const auto ms = stats::MeanAndStd(values);
      row.insert(row.end(), {N(ms.n), F(ms.mean), F(ms.std)});
    } else {
      row.insert(row.end(), {N(values.size()), "", ""});
    }
    for (const char* outcome : {"satisfaction", "likeness"}) {
      const auto c = TryPearson(rows, var, outcome, t.notes);
      if (c) {
        row.insert(row.end(), {F(c->r), P(c->p), S(c->p)});
      } else {
        row.insert(row.end(), {"", "", ""});
      }
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table CrossMethodTable(const Workspace& ws) {
  Table t = NewTable(ws, "cross_method",
                     "Correlations of contextual variables with other methods");
  t.header = {"panel", "row", "column", "n", "r", "p", "stars"};
  if (!ws.scores) {
    t.notes.push_back("skipped: no contextual score file");
    return t;
  }
  const auto rows = RowsOf(ws);
  const std::vector<std::string> ctx{"self.contextual.joy",
                                     "self.contextual.sadness",
                                     "self.contextual.anger"};
  auto emit = [&](const std::string& panel, const std::string& a,
                  const std::string& b) {
    if (a == b) {
      const auto n = rows.Values(a).size();
      t.rows.push_back({panel, a, b, N(n), F(1.0), P(0.0), S(0.0)});
      return;
    }
    const auto c = TryPearson(rows, a, b, t.notes);
    if (c) {
      t.rows.push_back({panel, a, b, N(c->n), F(c->r), P(c->p), S(c->p)});
    } else {
      t.rows.push_back({panel, a, b, "", "", "", ""});
    }
  };
  for (const auto& a : ctx) {
    for (const auto& b : ctx) emit("contextual", a, b);
  }
  const std::vector<std::string> emo{"self.emoticon.joy",
                                     "self.emoticon.sadness",
                                     "self.emoticon.anger"};
  const std::vector<std::string> lex{"self.lexicon.positive_emotions",
                                     "self.lexicon.sadness",
                                     "self.lexicon.anger"};
  for (const auto& a : ctx) {
    for (const auto& b : emo) emit("emoticon", a, b);
    for (const auto& b : lex) emit("lexicon", a, b);
  }
  return t;
}

Table RegressionTable(const Workspace& ws) {
  Table t = NewTable(ws, "regression", "Hierarchical regression");
  t.header = {"outcome",     "method",   "step",      "model",
              "n",           "r2",       "df1",       "df2",
              "f",           "p",        "stars",     "delta_r2",
              "f_change",    "change_df1", "change_df2", "change_p",
              "change_stars"};
  const Encoding enc = BuildEncoding(ws.corpus, ws.config.categorical);
  const auto rows = BuildAnalysisTable(ws.corpus, ws.profiles, enc);
  static const char* kStepNames[] = {"Individual Difference",
                                     "+Participant Affect", "+Partner Affect"};
  for (const char* outcome : {"satisfaction", "likeness"}) {
    for (Method m : ws.config.methods) {
      const std::string method(lexcorr::MethodName(m));
      try {
        const auto sw =
            stats::HierarchicalFit(rows, ConfiguredBlocks(ws, enc, m), outcome);
        for (std::size_t s = 0; s < sw.steps.size(); ++s) {
          const auto& fit = sw.steps[s];
          std::vector<std::string> row{
              outcome, method, N(s + 1),
              s < 3 ? kStepNames[s] : "step " + N(s + 1), N(fit.n), F(fit.r2),
              N(fit.df_model), N(fit.df_residual), F(fit.f, 4), P(fit.p),
              S(fit.p)};
          if (s == 0) {
            row.insert(row.end(), {"", "", "", "", "", ""});
          } else {
            const auto& ch = sw.changes[s - 1];
            row.insert(row.end(), {F(ch.delta_r2), F(ch.f_change, 4),
                                   N(ch.df1), N(ch.df2), P(ch.p), S(ch.p)});
          }
          t.rows.push_back(std::move(row));
        }
        if (sw.dropped_rows > 0) {
          t.notes.push_back(fmt::format("{}/{}: {} rows dropped (listwise)",
                                        outcome, method, sw.dropped_rows));
        }
      } catch (const ValidationError& e) {
        t.notes.push_back(fmt::format("{}/{} skipped: {}", outcome, method,
                                      e.what()));
      }
    }
  }
  return t;
}

Table DiscreteTable(const Workspace& ws) {
  Table t = NewTable(ws, "discrete", "Categorical variables vs outcomes");
  t.header = {"outcome", "variable", "test", "groups", "group_n", "group_mean",
              "statistic", "df1",    "df2",  "p",      "stars",   "note"};
  const auto variant = ws.config.t_test == "pooled"
                           ? stats::TTestVariant::kPooled
                           : stats::TTestVariant::kUnequalVariance;

  using Getter = std::optional<std::string> (*)(const corpus::ParticipantRecord&);
  const std::vector<std::pair<std::string, Getter>> vars{
      {"gender",
       [](const corpus::ParticipantRecord& p) -> std::optional<std::string> {
         if (!p.gender.present()) return std::nullopt;
         return std::string(corpus::Name(p.gender.value()));
       }},
      {"svo",
       [](const corpus::ParticipantRecord& p) -> std::optional<std::string> {
         if (!p.svo.present()) return std::nullopt;
         return std::string(corpus::Name(p.svo.value()));
       }},
      {"ethnicity",
       [](const corpus::ParticipantRecord& p) -> std::optional<std::string> {
         if (!p.ethnicity.present()) return std::nullopt;
         return std::string(corpus::Name(p.ethnicity.value()));
       }}};

  for (const char* outcome : {"satisfaction", "likeness"}) {
    const bool sat = std::string_view(outcome) == "satisfaction";
    for (const auto& [var, get] : vars) {
      std::map<std::string, std::vector<double>> groups;
      for (const auto& d : ws.corpus.dialogues) {
        for (const auto& p : d.participants) {
          const auto& y = sat ? p.satisfaction : p.likeness;
          const auto level = get(p);
          if (y.present() && level) groups[*level].push_back(y.value());
        }
      }
      std::vector<std::string> levels;
      if (var == "gender") levels = {"Female", "Male"};
      else if (var == "svo") levels = {"Prosocial", "Proself"};
      else levels = corpus::EthnicityLevels();

      std::vector<std::string> names, ns, means;
      std::vector<std::vector<double>> data;
      std::string note;
      for (const auto& l : levels) {
        const auto& g = groups[l];
        if (var == "ethnicity" && g.size() < 2) {
          if (!g.empty()) {
            note += (note.empty() ? "" : "; ") + l + " left out (n=" +
                    N(g.size()) + ")";
          }
          continue;
        }
        names.push_back(l);
        ns.push_back(N(g.size()));
        double sum = 0.0;
        for (double v : g) sum += v;
        means.push_back(g.empty() ? "" : F(sum / g.size(), 4));
        data.push_back(g);
      }
      auto join = [](const std::vector<std::string>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "|" : "") + v[i];
        return s;
      };
      const std::string test = var == "ethnicity" ? "anova" : "t";
      std::string skip;
      if (var == "ethnicity") {
        if (data.size() < 2) skip = "fewer than two groups with 2+ members";
      } else {
        for (std::size_t i = 0; i < data.size(); ++i) {
          if (data[i].size() < 2) {
            skip = "group " + names[i] + " has " + N(data[i].size()) +
                   " member(s)";
            break;
          }
        }
      }
      std::vector<std::string> row{outcome, var, test, join(names), join(ns),
                                   join(means)};
      if (!skip.empty()) {
        row.insert(row.end(), {"", "", "", "", "", "skipped: " + skip});
        t.notes.push_back(std::string(outcome) + "/" + var + " skipped: " + skip);
      } else {
        try {
          if (test == "t") {
            const auto r = stats::TTest(data[0], data[1], variant);
            row.insert(row.end(), {F(r.t, 4), F(r.df, 2), "", P(r.p), S(r.p),
                                   note});
          } else {
            const auto r = stats::OneWayAnova(data);
            row.insert(row.end(),
                       {F(r.f, 4), F(r.df_between, 0), F(r.df_within, 0),
                        P(r.p), S(r.p), note});
          }
        } catch (const ValidationError& e) {
          row.insert(row.end(),
                     {"", "", "", "", "", std::string("skipped: ") + e.what()});
        }
      }
      t.rows.push_back(std::move(row));
    }
  }
  t.comments.push_back("t_test=" + ws.config.t_test);
  return t;
}

Table LogOddsTable(const Workspace& ws) {
  Table t = NewTable(ws, "logodds", "Top tokens by log-odds ratio");
  t.comments.push_back(fmt::format("alpha0={}", ws.config.alpha0));
  t.comments.push_back("tie_policy=" + ws.config.tie_policy.ToString());
  t.comments.push_back(fmt::format("min_count={}", ws.config.min_count));
  t.comments.push_back(fmt::format("top_k={}", ws.config.top_k));
  t.header = {"method", "category", "rank", "token", "delta", "z", "p", "stars"};
  for (Method m : ws.config.methods) {
    const std::string method(lexcorr::MethodName(m));
    if (!Available(ws, m)) {
      t.notes.push_back(method + " skipped: no score file");
      continue;
    }
    const auto labeling =
        lexcorr::LabelCorpus(ws.corpus, m, ws.inputs(), ws.config.tie_policy);
    t.comments.push_back(fmt::format("{}: labeled={} ties={} unlabeled={}",
                                     method,
                                     labeling.labels.size() - labeling.unlabeled,
                                     labeling.ties, labeling.unlabeled));
    const auto ts = lexcorr::TokenStats::Build(ws.corpus, labeling, &ws.emoticons);
    for (std::size_t c = 0; c < ts.categories.size(); ++c) {
      if (ts.totals[c] == 0.0) {
        t.notes.push_back(method + "/" + ts.categories[c] +
                          ": no labeled utterances");
        continue;
      }
      const auto top = lexcorr::TopKCorrelates(
          lexcorr::LogOddsDirichlet(ts, c, ws.config.alpha0,
                                    ws.config.min_count),
          ws.config.top_k);
      if (top.empty()) {
        t.notes.push_back(method + "/" + ts.categories[c] +
                          ": no token reaches min_count");
      }
      for (std::size_t r = 0; r < top.size(); ++r) {
        const auto& e = top[r];
        t.rows.push_back({method, e.category, N(r + 1), e.token, F(e.delta),
                          F(e.z, 4), P(e.p), S(e.p)});
      }
    }
  }
  return t;
}

Table SamplesTable(const Workspace& ws) {
  Table t = NewTable(ws, "samples",
                     "High-confidence contextual predictions without "
                     "emoticon or lexicon signal");
  t.header = {"category", "rank", "utterance_id", "dialogue_id", "confidence",
              "text"};
  if (!ws.scores) {
    t.notes.push_back("skipped: no contextual score file");
    return t;
  }
  const auto labelings = LabelAll(ws);
  const auto& cats = lexcorr::CategoryNames(Method::kContextual);
  for (std::size_t c = 0; c < cats.size(); ++c) {
    const auto samples = lexcorr::TopConfidentSamples(
        ws.corpus, labelings, static_cast<int>(c), ws.config.samples_k);
    if (samples.empty()) t.notes.push_back(cats[c] + ": no qualifying utterance");
    for (std::size_t r = 0; r < samples.size(); ++r) {
      const auto& s = samples[r];
      t.rows.push_back({cats[c], N(r + 1), s.utterance_id, s.dialogue_id,
                        F(s.confidence, 4), s.text});
    }
  }
  return t;
}

std::vector<std::filesystem::path> Emit(const Workspace& ws,
                                        const std::vector<Table>& tables) {
  std::error_code ec;
  std::filesystem::create_directories(ws.config.output_dir, ec);
  if (ec) {
    throw IoError("cannot create output directory " +
                  ws.config.output_dir.string() + ": " + ec.message());
  }
  std::vector<std::filesystem::path> written;
  for (const auto& table : tables) {
    for (const auto& format : ws.config.report_formats) {
      std::ostringstream out;
      if (format == "csv") WriteCsv(table, out);
      else WriteMarkdown(table, out);
      const auto path = ws.config.output_dir / (table.name + "." + format);
      WriteFile(path, out.str());
      written.push_back(path);
    }
  }
  return written;
}

std::vector<std::filesystem::path> RunReport(const Workspace& ws) {
  const std::vector<Table> tables{
      ProfilesTable(ws),   PrevalenceTable(ws), CorrelationsTable(ws),
      CrossMethodTable(ws), RegressionTable(ws), DiscreteTable(ws),
      LogOddsTable(ws),    SamplesTable(ws)};
  auto written = Emit(ws, tables);
  std::ostringstream md;
  md << "# Affect and negotiation outcomes\n\n"
     << "- corpus_sha256: " << ws.corpus_hash << "\n"
     << "- config_sha256: " << ws.config_hash << "\n"
     << "- dialogues: " << ws.corpus.dialogues.size() << "\n\n";
  for (const auto& t : tables) {
    if (t.name == "profiles") continue;
    Table copy = t;
    copy.comments.clear();
    WriteMarkdown(copy, md);
  }
  const auto path = ws.config.output_dir / "report.md";
  WriteFile(path, md.str());
  written.push_back(path);
  return written;
}

}  // namespace negaffect::pipeline
