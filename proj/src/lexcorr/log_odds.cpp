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
#include <cmath>

#include "negaffect/lexcorr.hpp"
#include "negaffect/stats.hpp"

namespace negaffect::lexcorr {
namespace {

bool HasWordMaterial(std::string_view token) {
  return std::any_of(token.begin(), token.end(), [](unsigned char c) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') ||
           (c >= 'A' && c <= 'Z') || c >= 0x80;
  });
}

}  // namespace

TokenStats TokenStats::Build(const corpus::Corpus& corpus,
                             const Labeling& labeling,
                             const affect::EmoticonConfig* emoticons) {
  TokenStats stats;
  stats.categories = CategoryNames(labeling.method);
  const std::size_t nc = stats.categories.size();
  stats.totals.assign(nc, 0.0);
  std::size_t i = 0;
  for (const auto& d : corpus.dialogues) {
    for (const auto& u : d.utterances) {
      const auto& l = labeling.labels.at(i++);
      if (l.utterance_id != u.id) {
        throw std::invalid_argument("labeling does not match corpus order");
      }
      if (!l.label) continue;
      for (const auto& tok : affect::Tokenize(u.text, emoticons)) {
        if (emoticons != nullptr && emoticons->CategoryOf(tok)) continue;
        if (!HasWordMaterial(tok)) continue;
        auto& row = stats.counts[tok];
        if (row.empty()) row.assign(nc, 0.0);
        row[*l.label] += 1.0;
        stats.totals[*l.label] += 1.0;
        stats.background[tok] += 1.0;
        stats.background_total += 1.0;
      }
    }
  }
  return stats;
}

LogOddsEntry LogOddsForToken(double y_i, double n_i, double y_j, double n_j,
                             double y0, double n0, double alpha0) {
  const double a_w = alpha0 * y0 / n0;
  LogOddsEntry e;
  e.delta = std::log((y_i + a_w) / (n_i + alpha0 - y_i - a_w)) -
            std::log((y_j + a_w) / (n_j + alpha0 - y_j - a_w));
  e.variance = 1.0 / (y_i + a_w) + 1.0 / (y_j + a_w);
  e.z = e.delta / std::sqrt(e.variance);
  e.p = stats::NormalTwoTailedP(e.z);
  return e;
}

std::vector<LogOddsEntry> LogOddsDirichlet(const TokenStats& stats,
                                           std::size_t category, double alpha0,
                                           double min_count) {
  if (!(alpha0 > 0.0)) throw ValidationError("log-odds: alpha0 must be positive");
  if (category >= stats.categories.size()) {
    throw std::out_of_range("log-odds: category index out of range");
  }
  if (!(stats.background_total > 0.0)) return {};
  const double n_i = stats.totals[category];
  double n_all = 0.0;
  for (double t : stats.totals) n_all += t;
  const double n_j = n_all - n_i;

  std::vector<LogOddsEntry> out;
  for (const auto& [token, counts] : stats.counts) {
    const auto bg = stats.background.find(token);
    if (bg == stats.background.end() || !(bg->second > 0.0)) {
      throw ValidationError("log-odds: token \"" + token +
                            "\" has no background count");
    }
    if (bg->second < min_count) continue;
    const double y_i = counts[category];
    double y_all = 0.0;
    for (double c : counts) y_all += c;
    auto e = LogOddsForToken(y_i, n_i, y_all - y_i, n_j, bg->second,
                             stats.background_total, alpha0);
    e.token = token;
    e.category = stats.categories[category];
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(), [](const LogOddsEntry& a,
                                       const LogOddsEntry& b) {
    if (a.z != b.z) return a.z > b.z;
    return a.token < b.token;
  });
  return out;
}

std::vector<LogOddsEntry> TopKCorrelates(std::vector<LogOddsEntry> entries,
                                         std::size_t k) {
  std::sort(entries.begin(), entries.end(), [](const LogOddsEntry& a,
                                               const LogOddsEntry& b) {
    if (a.z != b.z) return a.z > b.z;
    return a.token < b.token;
  });
  if (entries.size() > k) entries.resize(k);
  return entries;
}

}  // namespace negaffect::lexcorr
