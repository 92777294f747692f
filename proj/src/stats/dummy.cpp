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

#include "negaffect/stats.hpp"

namespace negaffect::stats {

DummyCoding DummyCode(const std::vector<std::optional<std::string>>& values,
                      const std::vector<std::string>& levels,
                      std::string_view reference) {
  const auto ref = std::find(levels.begin(), levels.end(), reference);
  if (ref == levels.end()) {
    throw ValidationError("dummy coding: reference level \"" +
                          std::string(reference) + "\" not among levels");
  }
  DummyCoding out;
  for (const auto& level : levels) {
    if (level != reference) out.column_levels.push_back(level);
  }
  out.rows.reserve(values.size());
  for (const auto& v : values) {
    if (!v) {
      out.rows.emplace_back(std::nullopt);
      continue;
    }
    const auto it =
        std::find(out.column_levels.begin(), out.column_levels.end(), *v);
    std::vector<double> row(out.column_levels.size(), 0.0);
    if (it != out.column_levels.end()) {
      row[it - out.column_levels.begin()] = 1.0;
    } else if (*v != reference) {
      throw ValidationError("dummy coding: unseen level \"" + *v + "\"");
    }
    out.rows.emplace_back(std::move(row));
  }
  return out;
}

std::string MostFrequentLevel(
    const std::vector<std::optional<std::string>>& values,
    const std::vector<std::string>& levels) {
  if (levels.empty()) throw ValidationError("most frequent level: no levels");
  std::vector<std::size_t> counts(levels.size(), 0);
  for (const auto& v : values) {
    if (!v) continue;
    const auto it = std::find(levels.begin(), levels.end(), *v);
    if (it != levels.end()) ++counts[it - levels.begin()];
  }
  const auto best = std::max_element(counts.begin(), counts.end());
  return levels[best - counts.begin()];
}

}  // namespace negaffect::stats
