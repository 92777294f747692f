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
#include <limits>

#include "negaffect/kernels.hpp"
#include "negaffect/stats.hpp"

namespace negaffect::stats {
namespace {

struct Moments {
  double n;
  double mean;
  double var;  // sample variance
};

Moments MomentsOf(std::span<const double> v) {
  const double n = static_cast<double>(v.size());
  const double mean = kernels::Sum(v) / n;
  const double ss = kernels::SumSquaredDeviations(v, mean);
  return {n, mean, ss / (n - 1.0)};
}

}  // namespace

TTestResult TTest(std::span<const double> a, std::span<const double> b,
                  TTestVariant variant) {
  if (a.size() < 2 || b.size() < 2) {
    throw ValidationError("t-test: each group needs at least two values");
  }
  const Moments ma = MomentsOf(a);
  const Moments mb = MomentsOf(b);
  const double diff = ma.mean - mb.mean;

  TTestResult out;
  double se2 = 0.0;
  if (variant == TTestVariant::kPooled) {
    out.df = ma.n + mb.n - 2.0;
    const double pooled =
        ((ma.n - 1.0) * ma.var + (mb.n - 1.0) * mb.var) / out.df;
    se2 = pooled * (1.0 / ma.n + 1.0 / mb.n);
  } else {
    const double va = ma.var / ma.n;
    const double vb = mb.var / mb.n;
    se2 = va + vb;
    const double denom =
        va * va / (ma.n - 1.0) + vb * vb / (mb.n - 1.0);
    out.df = denom > 0.0 ? se2 * se2 / denom : ma.n + mb.n - 2.0;
  }

  if (se2 == 0.0) {
    if (diff == 0.0) {
      out.t = 0.0;
      out.p = 1.0;
    } else {
      out.t = diff > 0 ? std::numeric_limits<double>::infinity()
                       : -std::numeric_limits<double>::infinity();
      out.p = 0.0;
    }
    return out;
  }
  out.t = diff / std::sqrt(se2);
  out.p = StudentTTwoTailedP(out.t, out.df);
  return out;
}

AnovaResult OneWayAnova(const std::vector<std::vector<double>>& groups) {
  if (groups.size() < 2) throw ValidationError("anova: needs at least two groups");
  std::size_t n = 0;
  double grand_sum = 0.0;
  for (const auto& g : groups) {
    if (g.empty()) throw ValidationError("anova: empty group");
    n += g.size();
    grand_sum += kernels::Sum(g);
  }
  const std::size_t k = groups.size();
  if (n <= k) {
    throw ValidationError("anova: total n must exceed the number of groups");
  }
  const double grand_mean = grand_sum / static_cast<double>(n);
  double ss_between = 0.0;
  double ss_within = 0.0;
  for (const auto& g : groups) {
    const double m = kernels::Sum(g) / static_cast<double>(g.size());
    ss_between += static_cast<double>(g.size()) * (m - grand_mean) * (m - grand_mean);
    ss_within += kernels::SumSquaredDeviations(g, m);
  }
  AnovaResult out;
  out.df_between = static_cast<double>(k - 1);
  out.df_within = static_cast<double>(n - k);
  out.ms_between = ss_between / out.df_between;
  out.ms_within = ss_within / out.df_within;
  if (out.ms_within == 0.0) {
    if (out.ms_between == 0.0) {
      out.f = 0.0;
      out.p = 1.0;
    } else {
      out.f = std::numeric_limits<double>::infinity();
      out.p = 0.0;
    }
    return out;
  }
  out.f = out.ms_between / out.ms_within;
  out.p = FUpperP(out.f, out.df_between, out.df_within);
  return out;
}

}  // namespace negaffect::stats
