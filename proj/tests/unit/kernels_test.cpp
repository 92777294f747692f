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
#include <random>
#include <vector>

#include "doctest.h"
#include "negaffect/kernels.hpp"

namespace k = negaffect::kernels;

namespace {

std::vector<double> RandomVector(std::size_t n, std::mt19937_64& rng,
                                 double scale = 1.0) {
  std::normal_distribution<double> d(0.0, scale);
  std::vector<double> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

// Agreement bound for two summation orders over n terms.
double Bound(std::size_t n, double magnitude) {
  return 4.0 * static_cast<double>(n + 1) * 2.220446049250313e-16 * magnitude;
}

double AbsSum(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::fabs(a[i] * b[i]);
  return s;
}

}  // namespace

TEST_SUITE("kernels") {
  TEST_CASE("scalar kernels on small inputs") {
    const std::vector<double> a{1, 2, 3};
    const std::vector<double> b{4, 5, 6};
    CHECK(k::scalar::Dot(a, b) == 32.0);
    CHECK(k::scalar::Sum(a) == 6.0);
    CHECK(k::scalar::SumSquaredDeviations(a, 2.0) == 2.0);
    std::vector<double> y{1, 1, 1};
    k::scalar::Axpy(2.0, a, y);
    CHECK(y == std::vector<double>{3, 5, 7});
    CHECK(k::scalar::Dot(std::vector<double>{}, std::vector<double>{}) == 0.0);
  }

  TEST_CASE("dispatch reports a supported ISA") {
    CHECK(k::IsaSupported(k::Isa::kScalar));
    CHECK(k::IsaSupported(k::ActiveIsa()));
    CHECK_FALSE(k::IsaName(k::ActiveIsa()).empty());
  }

#if defined(NEGAFFECT_HAVE_AVX2)
  TEST_CASE("avx2 matches the scalar reference") {
    if (!k::IsaSupported(k::Isa::kAvx2)) {
      MESSAGE("AVX2 not available on this CPU; equivalence not exercised");
      return;
    }
    std::mt19937_64 rng(42);
    // Lengths straddle the 4- and 8-lane boundaries and the tail loop.
    for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 7u, 8u, 9u, 15u, 16u, 17u, 31u,
                          64u, 100u, 1023u, 4097u}) {
      CAPTURE(n);
      const auto a = RandomVector(n, rng);
      const auto b = RandomVector(n, rng, 3.0);
      const double bound = Bound(n, AbsSum(a, b)) + 1e-300;
      CHECK(std::fabs(k::avx2::Dot(a, b) - k::scalar::Dot(a, b)) <= bound);

      std::vector<double> ones(n, 1.0);
      CHECK(std::fabs(k::avx2::Sum(a) - k::scalar::Sum(a)) <=
            Bound(n, AbsSum(a, ones)) + 1e-300);

      const double c = 0.3;
      std::vector<double> dev(n);
      for (std::size_t i = 0; i < n; ++i) dev[i] = a[i] - c;
      CHECK(std::fabs(k::avx2::SumSquaredDeviations(a, c) -
                      k::scalar::SumSquaredDeviations(a, c)) <=
            Bound(n, AbsSum(dev, dev)) + 1e-300);

      // Axpy is element-wise; FMA rounding differs by at most one ulp.
      auto y1 = b;
      auto y2 = b;
      k::scalar::Axpy(-1.7, a, y1);
      k::avx2::Axpy(-1.7, a, y2);
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(std::fabs(y1[i] - y2[i]) <=
              4e-16 * (std::fabs(1.7 * a[i]) + std::fabs(b[i])) + 1e-300);
      }
    }
  }

  TEST_CASE("forcing the scalar path changes which kernels run") {
    const auto before = k::ActiveIsa();
    k::SetActiveIsa(k::Isa::kScalar);
    CHECK(k::ActiveIsa() == k::Isa::kScalar);
    const std::vector<double> a{1, 2, 3, 4, 5, 6, 7, 8, 9};
    CHECK(k::Dot(a, a) == 285.0);
    k::SetActiveIsa(before);
  }
#endif

  TEST_CASE("dispatched results agree on exactly representable data") {
    std::vector<double> a(1000);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = static_cast<double>(i % 17);
    double expect = 0.0;
    for (double x : a) expect += x * x;
    CHECK(k::Dot(a, a) == expect);
  }
}
