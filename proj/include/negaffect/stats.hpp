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

#ifndef NEGAFFECT_STATS_HPP_
#define NEGAFFECT_STATS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "negaffect/common.hpp"

namespace negaffect::stats {

// ---- Distribution functions ----

// Regularized incomplete beta I_x(a, b) for a, b > 0 and x in [0, 1].
double RegularizedIncompleteBeta(double x, double a, double b);

// Student t CDF; throws std::invalid_argument when df <= 0.
double StudentTCdf(double t, double df);
// Two-tailed p-value, 2 * (1 - CDF(|t|)), computed without cancellation.
double StudentTTwoTailedP(double t, double df);

// F distribution CDF at f >= 0.
double FCdf(double f, double d1, double d2);
// Upper tail 1 - CDF.
double FUpperP(double f, double d1, double d2);

// Two-tailed standard normal p-value for a z score.
double NormalTwoTailedP(double z);

// "***" for p < .001, "**" for p < .01, "*" for p < .05, "" otherwise.
std::string_view Stars(double p);

// ---- Descriptive ----

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;  // sample (n - 1) standard deviation
  std::size_t n = 0;
};

// Throws ValidationError with fewer than two values.
MeanStd MeanAndStd(std::span<const double> values);

struct Correlation {
  double r = 0.0;
  double p = 1.0;  // two-tailed
  std::size_t n = 0;
};

// Pearson r with the t-transform p-value on n - 2 df. Requires n >= 3 and
// non-zero variance in both inputs.
Correlation Pearson(std::span<const double> x, std::span<const double> y);

// ---- Group comparisons ----

enum class TTestVariant { kPooled, kUnequalVariance };

struct TTestResult {
  double t = 0.0;
  double df = 0.0;
  double p = 1.0;
};

TTestResult TTest(std::span<const double> a, std::span<const double> b,
                  TTestVariant variant = TTestVariant::kUnequalVariance);

struct AnovaResult {
  double f = 0.0;
  double df_between = 0.0;
  double df_within = 0.0;
  double p = 1.0;
  double ms_between = 0.0;
  double ms_within = 0.0;
};

AnovaResult OneWayAnova(const std::vector<std::vector<double>>& groups);

// ---- Dummy coding ----

struct DummyCoding {
  std::vector<std::string> column_levels;  // non-reference levels, in order
  // One row per input value; nullopt marks a missing input.
  std::vector<std::optional<std::vector<double>>> rows;
};

// values: nullopt = missing. Throws ValidationError when the reference is not
// among `levels` or a value is an unseen level.
DummyCoding DummyCode(const std::vector<std::optional<std::string>>& values,
                      const std::vector<std::string>& levels,
                      std::string_view reference);

// Most frequent non-missing level; ties go to the earlier level in `levels`.
std::string MostFrequentLevel(
    const std::vector<std::optional<std::string>>& values,
    const std::vector<std::string>& levels);

// ---- OLS ----

// Column-major n x p design matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t r, std::size_t c) { return data_[c * rows_ + r]; }
  double operator()(std::size_t r, std::size_t c) const {
    return data_[c * rows_ + r];
  }
  std::span<double> col(std::size_t c) {
    return {data_.data() + c * rows_, rows_};
  }
  std::span<const double> col(std::size_t c) const {
    return {data_.data() + c * rows_, rows_};
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// Fit with an intercept column; predictors exclude it.
struct ModelFit {
  std::vector<std::string> predictor_names;
  std::vector<double> coefficients;  // intercept first
  std::vector<double> fitted;
  std::vector<double> residuals;
  double r2 = 0.0;
  double f = 0.0;
  std::size_t df_model = 0;     // k
  std::size_t df_residual = 0;  // n - k - 1
  double p = 1.0;
  std::size_t n = 0;
  double ss_residual = 0.0;
  double ss_total = 0.0;
};

// Thrown when the design is rank deficient; carries the column set found to
// be linearly dependent (names include "(intercept)").
class RankDeficientError : public ValidationError {
 public:
  RankDeficientError(const std::string& what,
                     std::vector<std::string> dependent)
      : ValidationError(what), dependent_(std::move(dependent)) {}
  const std::vector<std::string>& dependent_columns() const {
    return dependent_;
  }

 private:
  std::vector<std::string> dependent_;
};

// Householder QR least squares. `predictors` is n x k without the intercept.
// Requires n > k + 1 and a full-rank design; the outcome must vary.
ModelFit OlsFit(const Matrix& predictors, std::span<const double> y,
                std::vector<std::string> names);

// Evaluates intercept + sum_j coefficient_j * x_j, in that order. OlsFit
// computes fitted values the same way, so in-sample predictions are exact.
double LinearPredict(std::span<const double> coefficients,
                     std::span<const double> x);

// ---- Hierarchical regression ----

struct RowId {
  std::string dialogue_id;
  int agent = 0;
  friend bool operator==(const RowId&, const RowId&) = default;
};

// Named numeric columns; nullopt marks a missing value.
struct AnalysisTable {
  std::vector<std::string> columns;
  std::vector<RowId> ids;
  std::vector<std::vector<std::optional<double>>> rows;

  // Throws ValidationError for an unknown name.
  std::size_t ColumnIndex(std::string_view name) const;
  bool HasColumn(std::string_view name) const;
  // Non-missing values of a column.
  std::vector<double> Values(std::string_view name) const;
};

struct StepChange {
  double delta_r2 = 0.0;
  double f_change = 0.0;
  std::size_t df1 = 0;  // added predictors
  std::size_t df2 = 0;  // n - k_full - 1
  double p = 1.0;
};

struct StepwiseResult {
  std::vector<ModelFit> steps;
  // changes[i] describes steps[i + 1] relative to steps[i].
  std::vector<StepChange> changes;
  std::size_t n = 0;
  std::size_t dropped_rows = 0;
};

// F-change statistic for nested models.
double FChange(double r2_reduced, double r2_full, std::size_t delta_k,
               std::size_t n, std::size_t k_full);

// Fits nested models on cumulative blocks. Rows missing any variable from
// the union of all blocks or the outcome are dropped once, so every step
// shares the same n. Names repeated in a later block are not re-added; a
// block adding nothing yields delta R^2 = 0 and F-change = 0 on (0, df2).
StepwiseResult HierarchicalFit(const AnalysisTable& table,
                               const std::vector<std::vector<std::string>>& blocks,
                               std::string_view outcome);

}  // namespace negaffect::stats

#endif  // NEGAFFECT_STATS_HPP_
