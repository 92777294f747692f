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

constexpr double kRankTolerance = 1e-9;
constexpr char kInterceptName[] = "(intercept)";

// Column j failed the pivot test after reflections 0..j-1 were applied.
// Solves R[0:j,0:j] b = (Q^T x_j)[0:j] to find which earlier columns x_j
// depends on.
[[noreturn]] void ThrowRankDeficient(const Matrix& work,
                                     const std::vector<double>& col_norms,
                                     const std::vector<std::string>& names,
                                     std::size_t j) {
  std::vector<std::string> dependent;
  if (col_norms[j] == 0.0) {
    dependent.push_back(names[j]);
    throw RankDeficientError(
        "rank-deficient design: column \"" + names[j] + "\" is all zeros",
        dependent);
  }
  std::vector<double> b(j, 0.0);
  for (std::size_t ii = j; ii-- > 0;) {
    double acc = work(ii, j);
    for (std::size_t c = ii + 1; c < j; ++c) acc -= work(ii, c) * b[c];
    b[ii] = acc / work(ii, ii);
  }
  std::string list;
  for (std::size_t i = 0; i < j; ++i) {
    if (std::fabs(b[i]) * col_norms[i] > 1e-8 * col_norms[j]) {
      dependent.push_back(names[i]);
      list += (list.empty() ? "" : ", ") + ("\"" + names[i] + "\"");
    }
  }
  dependent.push_back(names[j]);
  throw RankDeficientError("rank-deficient design: column \"" + names[j] +
                               "\" is a linear combination of {" + list + "}",
                           dependent);
}

}  // namespace

double LinearPredict(std::span<const double> coefficients,
                     std::span<const double> x) {
  double acc = coefficients[0];
  for (std::size_t j = 0; j < x.size(); ++j) acc += coefficients[j + 1] * x[j];
  return acc;
}

ModelFit OlsFit(const Matrix& predictors, std::span<const double> y,
                std::vector<std::string> names) {
  const std::size_t n = predictors.rows();
  const std::size_t k = predictors.cols();
  const std::size_t p = k + 1;
  if (names.size() != k) {
    throw std::invalid_argument("OlsFit: names/columns mismatch");
  }
  if (y.size() != n) {
    throw ValidationError("ols: outcome length " + std::to_string(y.size()) +
                          " != rows " + std::to_string(n));
  }
  if (n <= p) {
    throw ValidationError("ols: needs n > k + 1 (n = " + std::to_string(n) +
                          ", k = " + std::to_string(k) + ")");
  }

  std::vector<std::string> all_names;
  all_names.reserve(p);
  all_names.emplace_back(kInterceptName);
  all_names.insert(all_names.end(), names.begin(), names.end());

  Matrix work(n, p);
  for (std::size_t i = 0; i < n; ++i) work(i, 0) = 1.0;
  for (std::size_t c = 0; c < k; ++c) {
    auto src = predictors.col(c);
    auto dst = work.col(c + 1);
    std::copy(src.begin(), src.end(), dst.begin());
  }
  std::vector<double> col_norms(p);
  for (std::size_t c = 0; c < p; ++c) {
    col_norms[c] = std::sqrt(kernels::Dot(work.col(c), work.col(c)));
  }

  std::vector<double> qty(y.begin(), y.end());
  std::vector<double> v(n);
  for (std::size_t j = 0; j < p; ++j) {
    const std::size_t len = n - j;
    auto x = work.col(j).subspan(j, len);
    const double norm = std::sqrt(kernels::Dot(x, x));
    if (!(norm > kRankTolerance * col_norms[j])) {
      ThrowRankDeficient(work, col_norms, all_names, j);
    }
    const double alpha = x[0] > 0.0 ? -norm : norm;
    std::span<double> vj(v.data(), len);
    std::copy(x.begin(), x.end(), vj.begin());
    vj[0] -= alpha;
    const double vnorm2 = kernels::Dot(vj, vj);
    for (std::size_t c = j + 1; c < p; ++c) {
      auto col = work.col(c).subspan(j, len);
      const double s = kernels::Dot(vj, col);
      kernels::Axpy(-2.0 * s / vnorm2, vj, col);
    }
    {
      std::span<double> tail(qty.data() + j, len);
      const double s = kernels::Dot(vj, tail);
      kernels::Axpy(-2.0 * s / vnorm2, vj, tail);
    }
    work(j, j) = alpha;
  }

  ModelFit fit;
  fit.predictor_names = std::move(names);
  fit.coefficients.assign(p, 0.0);
  for (std::size_t jj = p; jj-- > 0;) {
    double acc = qty[jj];
    for (std::size_t c = jj + 1; c < p; ++c) {
      acc -= work(jj, c) * fit.coefficients[c];
    }
    fit.coefficients[jj] = acc / work(jj, jj);
  }

  fit.n = n;
  fit.df_model = k;
  fit.df_residual = n - k - 1;
  fit.fitted.resize(n);
  fit.residuals.resize(n);
  std::vector<double> row(k);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < k; ++c) row[c] = predictors(i, c);
    fit.fitted[i] = LinearPredict(fit.coefficients, row);
    fit.residuals[i] = y[i] - fit.fitted[i];
  }
  const double mean_y = kernels::Sum(y) / static_cast<double>(n);
  fit.ss_total = kernels::SumSquaredDeviations(y, mean_y);
  if (fit.ss_total == 0.0) {
    throw ValidationError("ols: outcome has zero variance");
  }
  fit.ss_residual = kernels::Dot(fit.residuals, fit.residuals);
  fit.r2 = std::fmax(0.0, std::fmin(1.0, 1.0 - fit.ss_residual / fit.ss_total));

  if (k == 0) {
    fit.f = 0.0;
    fit.p = 1.0;
  } else if (fit.r2 >= 1.0) {
    fit.f = std::numeric_limits<double>::infinity();
    fit.p = 0.0;
  } else {
    const double df1 = static_cast<double>(fit.df_model);
    const double df2 = static_cast<double>(fit.df_residual);
    fit.f = (fit.r2 / df1) / ((1.0 - fit.r2) / df2);
    fit.p = FUpperP(fit.f, df1, df2);
  }
  return fit;
}

}  // namespace negaffect::stats
