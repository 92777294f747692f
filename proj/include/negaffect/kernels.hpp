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

#ifndef NEGAFFECT_KERNELS_HPP_
#define NEGAFFECT_KERNELS_HPP_

#include <span>
#include <string_view>

// Data-parallel double-precision loops used by the statistics engine. Each
// kernel has a scalar reference and, on x86-64, an AVX2+FMA variant. The
// variant is chosen once at startup from the CPU features; the environment
// variable NEGAFFECT_SIMD=scalar forces the reference path.
//
// Variants differ only in summation order, so results agree to a few ulps
// of the accumulated magnitude, not bit for bit.
namespace negaffect::kernels {

enum class Isa { kScalar, kAvx2 };

std::string_view IsaName(Isa isa);
bool IsaSupported(Isa isa);
Isa ActiveIsa();
// Throws std::invalid_argument if `isa` is not supported on this CPU.
void SetActiveIsa(Isa isa);

// Dispatched entry points. Spans must have matching lengths.
double Dot(std::span<const double> a, std::span<const double> b);
// y += alpha * x
void Axpy(double alpha, std::span<const double> x, std::span<double> y);
double Sum(std::span<const double> x);
// sum_i (x_i - center)^2
double SumSquaredDeviations(std::span<const double> x, double center);

namespace scalar {
double Dot(std::span<const double> a, std::span<const double> b);
void Axpy(double alpha, std::span<const double> x, std::span<double> y);
double Sum(std::span<const double> x);
double SumSquaredDeviations(std::span<const double> x, double center);
}  // namespace scalar

#if defined(NEGAFFECT_HAVE_AVX2)
namespace avx2 {
double Dot(std::span<const double> a, std::span<const double> b);
void Axpy(double alpha, std::span<const double> x, std::span<double> y);
double Sum(std::span<const double> x);
double SumSquaredDeviations(std::span<const double> x, double center);
}  // namespace avx2
#endif

}  // namespace negaffect::kernels

#endif  // NEGAFFECT_KERNELS_HPP_
