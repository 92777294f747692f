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
#include <vector>

#include "negaffect/kernels.hpp"
#include "negaffect/stats.hpp"

namespace negaffect::stats {

MeanStd MeanAndStd(std::span<const double> values) {
  if (values.size() < 2) {
    throw ValidationError("mean/std needs at least two values, got " +
                          std::to_string(values.size()));
  }
  const double n = static_cast<double>(values.size());
  const double mean = kernels::Sum(values) / n;
  const double ss = kernels::SumSquaredDeviations(values, mean);
  return {mean, std::sqrt(ss / (n - 1.0)), values.size()};
}

Correlation Pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw ValidationError("pearson: length mismatch " +
                          std::to_string(x.size()) + " vs " +
                          std::to_string(y.size()));
  }
  const std::size_t n = x.size();
  if (n < 3) throw ValidationError("pearson: needs at least three pairs");
  const double mx = kernels::Sum(x) / static_cast<double>(n);
  const double my = kernels::Sum(y) / static_cast<double>(n);
  std::vector<double> cx(x.begin(), x.end());
  std::vector<double> cy(y.begin(), y.end());
  for (auto& v : cx) v -= mx;
  for (auto& v : cy) v -= my;
  const double sxx = kernels::Dot(cx, cx);
  const double syy = kernels::Dot(cy, cy);
  if (sxx == 0.0 || syy == 0.0) {
    throw ValidationError("pearson: zero variance, correlation undefined");
  }
  double r = kernels::Dot(cx, cy) / std::sqrt(sxx * syy);
  r = std::fmax(-1.0, std::fmin(1.0, r));
  Correlation out;
  out.r = r;
  out.n = n;
  const double df = static_cast<double>(n) - 2.0;
  const double one_minus = 1.0 - r * r;
  if (one_minus <= 0.0) {
    out.p = 0.0;
  } else {
    out.p = StudentTTwoTailedP(r * std::sqrt(df / one_minus), df);
  }
  return out;
}

}  // namespace negaffect::stats
