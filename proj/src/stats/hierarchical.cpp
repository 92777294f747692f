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
#include <limits>

#include "negaffect/stats.hpp"

namespace negaffect::stats {

std::size_t AnalysisTable::ColumnIndex(std::string_view name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) {
    throw ValidationError("unknown column \"" + std::string(name) + "\"");
  }
  return static_cast<std::size_t>(it - columns.begin());
}

bool AnalysisTable::HasColumn(std::string_view name) const {
  return std::find(columns.begin(), columns.end(), name) != columns.end();
}

std::vector<double> AnalysisTable::Values(std::string_view name) const {
  const std::size_t c = ColumnIndex(name);
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    if (r[c]) out.push_back(*r[c]);
  }
  return out;
}

double FChange(double r2_reduced, double r2_full, std::size_t delta_k,
               std::size_t n, std::size_t k_full) {
  if (delta_k == 0) return 0.0;
  const double df2 = static_cast<double>(n) - static_cast<double>(k_full) - 1.0;
  if (r2_full >= 1.0) return std::numeric_limits<double>::infinity();
  return ((r2_full - r2_reduced) / static_cast<double>(delta_k)) /
         ((1.0 - r2_full) / df2);
}

StepwiseResult HierarchicalFit(
    const AnalysisTable& table,
    const std::vector<std::vector<std::string>>& blocks,
    std::string_view outcome) {
  if (blocks.empty()) throw ValidationError("hierarchical fit: no blocks");

  std::vector<std::vector<std::string>> cumulative;
  std::vector<std::string> current;
  for (const auto& block : blocks) {
    for (const auto& name : block) {
      table.ColumnIndex(name);
      if (std::find(current.begin(), current.end(), name) == current.end()) {
        current.push_back(name);
      }
    }
    cumulative.push_back(current);
  }
  const std::vector<std::string>& all = cumulative.back();

  std::vector<std::size_t> all_idx;
  for (const auto& name : all) all_idx.push_back(table.ColumnIndex(name));
  const std::size_t y_idx = table.ColumnIndex(outcome);

  std::vector<std::size_t> kept;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    bool ok = row[y_idx].has_value();
    for (std::size_t c : all_idx) ok = ok && row[c].has_value();
    if (ok) kept.push_back(r);
  }

  StepwiseResult result;
  result.n = kept.size();
  result.dropped_rows = table.rows.size() - kept.size();
  std::vector<double> y;
  y.reserve(kept.size());
  for (std::size_t r : kept) y.push_back(*table.rows[r][y_idx]);

  for (const auto& names : cumulative) {
    Matrix x(kept.size(), names.size());
    for (std::size_t c = 0; c < names.size(); ++c) {
      const std::size_t src = table.ColumnIndex(names[c]);
      for (std::size_t i = 0; i < kept.size(); ++i) {
        x(i, c) = *table.rows[kept[i]][src];
      }
    }
    result.steps.push_back(OlsFit(x, y, names));
  }

  for (std::size_t s = 1; s < result.steps.size(); ++s) {
    const ModelFit& reduced = result.steps[s - 1];
    const ModelFit& full = result.steps[s];
    StepChange change;
    change.df1 = full.df_model - reduced.df_model;
    change.df2 = full.df_residual;
    if (change.df1 == 0) {
      change.delta_r2 = 0.0;
      change.f_change = 0.0;
      change.p = 1.0;
    } else {
      change.delta_r2 = std::fmax(0.0, full.r2 - reduced.r2);
      change.f_change = FChange(reduced.r2, reduced.r2 + change.delta_r2,
                                change.df1, full.n, full.df_model);
      change.p = std::isinf(change.f_change)
                     ? 0.0
                     : FUpperP(change.f_change, static_cast<double>(change.df1),
                               static_cast<double>(change.df2));
    }
    result.changes.push_back(change);
  }
  return result;
}

}  // namespace negaffect::stats
