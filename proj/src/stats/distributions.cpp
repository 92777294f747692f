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
#include <stdexcept>

#include "negaffect/stats.hpp"

namespace negaffect::stats {
namespace {

// Continued fraction for I_x(a, b), modified Lentz evaluation.
double BetaContinuedFraction(double x, double a, double b) {
  constexpr int kMaxIter = 100000;
  constexpr double kEps = 1e-16;
  constexpr double kTiny = 1e-300;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) return h;
  }
  throw std::runtime_error("incomplete beta continued fraction did not converge");
}

}  // namespace

double RegularizedIncompleteBeta(double x, double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw std::invalid_argument("incomplete beta: a and b must be positive");
  }
  if (std::isnan(x) || x < 0.0 || x > 1.0) {
    throw std::invalid_argument("incomplete beta: x outside [0,1]");
  }
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double log_front = a * std::log(x) + b * std::log1p(-x) -
                           (std::lgamma(a) + std::lgamma(b) -
                            std::lgamma(a + b));
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * BetaContinuedFraction(x, a, b) / a;
  }
  return 1.0 - front * BetaContinuedFraction(1.0 - x, b, a) / b;
}

double StudentTCdf(double t, double df) {
  if (!(df > 0.0)) throw std::invalid_argument("t CDF: df must be positive");
  if (std::isinf(t)) return t > 0 ? 1.0 : 0.0;
  const double tail = 0.5 * RegularizedIncompleteBeta(df / (df + t * t),
                                                      0.5 * df, 0.5);
  return t > 0.0 ? 1.0 - tail : tail;
}

double StudentTTwoTailedP(double t, double df) {
  if (!(df > 0.0)) throw std::invalid_argument("t CDF: df must be positive");
  if (std::isinf(t)) return 0.0;
  return RegularizedIncompleteBeta(df / (df + t * t), 0.5 * df, 0.5);
}

double FCdf(double f, double d1, double d2) {
  if (!(d1 > 0.0) || !(d2 > 0.0)) {
    throw std::invalid_argument("F CDF: degrees of freedom must be positive");
  }
  if (std::isnan(f) || f < 0.0) {
    throw std::invalid_argument("F CDF: F must be non-negative");
  }
  if (std::isinf(f)) return 1.0;
  return RegularizedIncompleteBeta(d1 * f / (d1 * f + d2), 0.5 * d1, 0.5 * d2);
}

double FUpperP(double f, double d1, double d2) {
  if (!(d1 > 0.0) || !(d2 > 0.0)) {
    throw std::invalid_argument("F CDF: degrees of freedom must be positive");
  }
  if (std::isnan(f) || f < 0.0) {
    throw std::invalid_argument("F CDF: F must be non-negative");
  }
  if (std::isinf(f)) return 0.0;
  return RegularizedIncompleteBeta(d2 / (d2 + d1 * f), 0.5 * d2, 0.5 * d1);
}

double NormalTwoTailedP(double z) {
  return std::erfc(std::fabs(z) / std::sqrt(2.0));
}

std::string_view Stars(double p) {
  if (p < 0.001) return "***";
  if (p < 0.01) return "**";
  if (p < 0.05) return "*";
  return "";
}

}  // namespace negaffect::stats
