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

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "negaffect/kernels.hpp"

namespace negaffect::kernels {
namespace {

struct Table {
  double (*dot)(std::span<const double>, std::span<const double>);
  void (*axpy)(double, std::span<const double>, std::span<double>);
  double (*sum)(std::span<const double>);
  double (*ssd)(std::span<const double>, double);
};

constexpr Table kScalarTable{scalar::Dot, scalar::Axpy, scalar::Sum,
                             scalar::SumSquaredDeviations};
#if defined(NEGAFFECT_HAVE_AVX2)
constexpr Table kAvx2Table{avx2::Dot, avx2::Axpy, avx2::Sum,
                           avx2::SumSquaredDeviations};
#endif

const Table& TableFor(Isa isa) {
#if defined(NEGAFFECT_HAVE_AVX2)
  if (isa == Isa::kAvx2) return kAvx2Table;
#endif
  (void)isa;
  return kScalarTable;
}

Isa DetectIsa() {
  if (const char* env = std::getenv("NEGAFFECT_SIMD")) {
    if (std::string(env) == "scalar") return Isa::kScalar;
  }
  return IsaSupported(Isa::kAvx2) ? Isa::kAvx2 : Isa::kScalar;
}

std::atomic<Isa>& ActiveSlot() {
  static std::atomic<Isa> slot{DetectIsa()};
  return slot;
}

const Table& Active() { return TableFor(ActiveSlot().load(std::memory_order_relaxed)); }

}  // namespace

std::string_view IsaName(Isa isa) {
  return isa == Isa::kAvx2 ? "avx2" : "scalar";
}

bool IsaSupported(Isa isa) {
  if (isa == Isa::kScalar) return true;
#if defined(NEGAFFECT_HAVE_AVX2)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa ActiveIsa() { return ActiveSlot().load(std::memory_order_relaxed); }

void SetActiveIsa(Isa isa) {
  if (!IsaSupported(isa)) {
    throw std::invalid_argument("kernel variant " + std::string(IsaName(isa)) +
                                " not supported on this CPU");
  }
  ActiveSlot().store(isa, std::memory_order_relaxed);
}

double Dot(std::span<const double> a, std::span<const double> b) {
  return Active().dot(a, b);
}
void Axpy(double alpha, std::span<const double> x, std::span<double> y) {
  Active().axpy(alpha, x, y);
}
double Sum(std::span<const double> x) { return Active().sum(x); }
double SumSquaredDeviations(std::span<const double> x, double center) {
  return Active().ssd(x, center);
}

}  // namespace negaffect::kernels
