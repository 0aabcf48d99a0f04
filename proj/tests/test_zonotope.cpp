// Copyright 2026 The Authors.
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


#include <random>

#include "coxeter_ehrhart/quasi_polynomial.hpp"
#include "coxeter_ehrhart/roots.hpp"
#include "coxeter_ehrhart/zonotope.hpp"
#include "doctest.h"
#include "test_support.hpp"

namespace coxeter_ehrhart {
namespace {

constexpr RootFamily kFamilies[] = {RootFamily::kA, RootFamily::kB,
                                    RootFamily::kC, RootFamily::kD};

QuasiPolynomial Poly(std::initializer_list<long> c) {
  return QuasiPolynomial(MakePolynomial(c));
}

QuasiPolynomial EvenOdd(std::initializer_list<long> even,
                        std::initializer_list<long> odd) {
  return QuasiPolynomial(
      std::vector<Polynomial>{MakePolynomial(even), MakePolynomial(odd)});
}

RatVector Half(std::size_t d) {
  return RatVector(std::vector<Rational>(d, Rational(1, 2)));
}

TEST_SUITE("quasi_polynomial") {

TEST_CASE("formatting") {
  CHECK(FormatPolynomial(MakePolynomial({1, 9, 39, 87})) ==
        "1 + 9t + 39t² + 87t³");
  CHECK(FormatPolynomial(MakePolynomial({0, 0, 3, 16}), true, false) ==
        "3t²+16t³");
  CHECK(FormatPolynomial(MakePolynomial({1, -1}), false, false) == "1-t");
  CHECK(FormatPolynomial(Polynomial{}) == "0");
  CHECK(FormatPolynomial(Polynomial{Rational(1, 2), Rational(0),
                                    Rational(3, 2)}) ==
        "(1/2) + (3/2)t²");
  CHECK(FormatPolynomial(MakePolynomial({0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1})) ==
        "t¹⁰");
}

TEST_CASE("evaluation, trimming and minimization") {
  const QuasiPolynomial q = EvenOdd({1, 4, 7}, {0, 2, 7});
  CHECK(q.Evaluate(1) == 9);
  CHECK(q.Evaluate(2) == 37);
  CHECK(q.Evaluate(3) == 69);
  CHECK(q.period() == 2);
  CHECK(q.degree() == 2);
  const QuasiPolynomial folded(std::vector<Polynomial>{
      MakePolynomial({1, 1}), MakePolynomial({1, 1}), MakePolynomial({1, 1}),
      MakePolynomial({1, 1})});
  CHECK(folded.Minimized() == Poly({1, 1}));
  const QuasiPolynomial six(std::vector<Polynomial>{
      MakePolynomial({1}), MakePolynomial({0}), MakePolynomial({2}),
      MakePolynomial({1}), MakePolynomial({0}), MakePolynomial({2})});
  CHECK(six.Minimized().period() == 3);
  CHECK(MakePolynomial({1, 2, 0, 0}).size() == 2);
}

TEST_CASE("interpolation recovers a polynomial") {
  const Polynomial p = MakePolynomial({3, -1, 0, 2});
  std::vector<Rational> xs;
  std::vector<Rational> ys;
  for (long x : {1L, 3L, 5L, 7L, 9L}) {
    xs.emplace_back(x);
    ys.push_back(EvaluatePolynomial(p, Rational(x)));
  }
  CHECK(Interpolate(xs, ys) == p);
}

}  // TEST_SUITE

TEST_SUITE("zonotope") {

TEST_CASE("independent subset examples") {
  const std::vector<IntVector> u = {{1}, {2}};
  CHECK(IndependentSubsets(u, 1) ==
        std::vector<std::vector<std::size_t>>{{}, {0}, {1}});
  const auto d2 = PositiveRoots(RootFamily::kD, 2).roots;
  CHECK(IndependentSubsets(d2, 2) ==
        std::vector<std::vector<std::size_t>>{{}, {0}, {0, 1}, {1}});
  const auto a3 = PositiveRoots(RootFamily::kA, 3).roots;
  const auto subsets = IndependentSubsets(a3, 3);
  CHECK(subsets.size() == 7);
  for (const auto& s : subsets) CHECK(s.size() <= 2);
}

TEST_CASE("independent subsets agree with a rank check over all subsets") {
  for (RootFamily f : kFamilies) {
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto roots = PositiveRoots(f, n).roots;
      std::size_t expected = 0;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << roots.size());
           ++mask) {
        std::vector<IntVector> s;
        for (std::size_t k = 0; k < roots.size(); ++k) {
          if (mask >> k & 1) s.push_back(roots[k]);
        }
        expected += Rank(s) == s.size();
      }
      CHECK(IndependentSubsets(roots, n).size() == expected);
    }
  }
}

TEST_CASE("almost integral examples") {
  const ZonotopeSpec segment({{1}}, RatVector(1));
  CHECK(EhrhartAlmostIntegral(segment) == Poly({1, 1}));
  const ZonotopeSpec shifted({{1}}, Half(1));
  CHECK(EhrhartAlmostIntegral(shifted) == EvenOdd({1, 1}, {0, 1}));
  const ZonotopeSpec b2(PositiveRoots(RootFamily::kB, 2).roots, Half(2));
  CHECK(EhrhartAlmostIntegral(b2) == EvenOdd({1, 4, 7}, {0, 2, 7}));
  const ZonotopeSpec square({{1, 1}, {1, -1}}, RatVector(2));
  CHECK(EhrhartAlmostIntegral(square).Evaluate(1) == 5);
  // A third-integer shift of a segment: points in [t/3, t/3 + t].
  const ZonotopeSpec third({{1}}, RatVector(std::vector<Rational>{
                                      Rational(1, 3)}));
  const QuasiPolynomial q = EhrhartAlmostIntegral(third);
  CHECK(q.period() == 3);
  for (long t = 1; t <= 9; ++t) {
    // floor(4t/3) - ceil(t/3) + 1
    const long expected = (4 * t) / 3 - (t + 2) / 3 + 1;
    CHECK(q.Evaluate(t) == expected);
  }
}

TEST_CASE("zonotope construction guards") {
  CHECK_THROWS_AS(ZonotopeSpec({{1, 0}}, RatVector(3)), DimensionError);
  CHECK_THROWS_AS(ZonotopeSpec({{0, 0}}, RatVector(2)),
                  std::invalid_argument);
}

TEST_CASE("integral Coxeter examples") {
  CHECK(EhrhartIntegralCoxeter(RootFamily::kB, 3) == Poly({1, 9, 39, 87}));
  CHECK(EhrhartIntegralCoxeter(RootFamily::kC, 2) == Poly({1, 6, 14}));
  CHECK(EhrhartIntegralCoxeter(RootFamily::kD, 4) ==
        Poly({1, 12, 72, 280, 636}));
  CHECK(EhrhartIntegralCoxeter(RootFamily::kA, 1) == Poly({1}));
  CHECK(EhrhartIntegralCoxeter(RootFamily::kD, 1) == Poly({1}));
}

TEST_CASE("standard Coxeter examples") {
  CHECK(EhrhartStandardCoxeter(RootFamily::kA, 4) ==
        EvenOdd({1, 6, 15, 16}, {0, 0, 3, 16}));
  CHECK(EhrhartStandardCoxeter(RootFamily::kB, 4) ==
        EvenOdd({1, 16, 126, 608, 1553}, {0, 0, 12, 212, 1553}));
  const QuasiPolynomial c3 = EhrhartStandardCoxeter(RootFamily::kC, 3);
  CHECK(c3 == Poly({1, 12, 66, 172}));
  CHECK(c3.period() == 1);
}

TEST_CASE("forest census examples") {
  const ForestCensus a3 = ComputeForestCensus(RootFamily::kA, 3);
  CHECK(a3.CountWithEdges(0) == 1);
  CHECK(a3.CountWithEdges(1) == 3);
  CHECK(a3.CountWithEdges(2) == 3);
  CHECK(a3.Total() == 7);

  const ForestCensus d2 = ComputeForestCensus(RootFamily::kD, 2);
  CHECK(d2.Total() == 4);
  CHECK(d2.counts().at(ForestKey{0, 2, 0, 0, 0, false}) == 1);
  CHECK(d2.counts().at(ForestKey{1, 1, 0, 0, 0, true}) == 2);
  CHECK(d2.counts().at(ForestKey{2, 0, 0, 0, 1, true}) == 1);
  CHECK(EhrhartIntegralFromCensus(d2) == Poly({1, 2, 2}));

  const ForestCensus b1 = ComputeForestCensus(RootFamily::kB, 1);
  CHECK(b1.Total() == 2);
  CHECK(b1.counts().at(ForestKey{1, 0, 1, 0, 0, true}) == 1);
  CHECK(EhrhartIntegralFromCensus(b1) == Poly({1, 1}));
}

TEST_CASE("enumeration size guard") {
  CHECK(MaxEnumerationSize(RootFamily::kA) == 8);
  CHECK(MaxEnumerationSize(RootFamily::kB) == 7);
  CHECK_THROWS_AS(ComputeForestCensus(RootFamily::kB, 8), SizeLimitError);
  CHECK_THROWS_AS(ComputeForestCensus(RootFamily::kA, 9), SizeLimitError);
}

TEST_CASE("forest route equals the generic subset route") {
  for (RootFamily f : kFamilies) {
    for (std::size_t n = 1; n <= 4; ++n) {
      CAPTURE(FamilyLetter(f));
      CAPTURE(n);
      const QuasiPolynomial standard = EhrhartStandardCoxeter(f, n);
      CHECK(standard ==
            EhrhartAlmostIntegral(ZonotopeSpec(PositiveRoots(f, n).roots,
                                               StandardShift(f, n))));
      CHECK(standard == EhrhartAlmostIntegral(StandardPermutahedron(f, n)));
      CHECK(EhrhartIntegralCoxeter(f, n) ==
            EhrhartAlmostIntegral(IntegralPermutahedron(f, n)));
    }
  }
}

TEST_CASE("type A integral coefficients count labeled forests") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const QuasiPolynomial q = EhrhartIntegralCoxeter(RootFamily::kA, n);
    const auto forests = testing::ForestCountsByEdges(n);
    REQUIRE(q.period() == 1);
    const Polynomial& p = q.Constituent(0);
    REQUIRE(p.size() == n);
    for (std::size_t i = 0; i < n; ++i) CHECK(p[i] == Rational(forests[i]));
    const Integer leading =
        n == 1 ? Integer(1) : testing::Power(static_cast<long>(n), n - 2);
    CHECK(p.back() == Rational(leading));
  }
}

TEST_CASE("period, monotonicity and constant terms") {
  for (RootFamily f : kFamilies) {
    for (std::size_t n = 1; n <= 5; ++n) {
      const QuasiPolynomial q = EhrhartStandardCoxeter(f, n);
      const bool integral = IsIntegral(f, n);
      CHECK(q.period() == (integral ? 1u : 2u));
      CHECK(q.Constituent(0).front() == 1);
      if (!integral) CHECK(q.Constituent(1).front() == 0);
      for (const QuasiPolynomial& poly : {q, EhrhartIntegralCoxeter(f, n)}) {
        Rational previous = 0;
        for (long t = 1; t <= 7; ++t) {
          const Rational value = poly.Evaluate(t);
          CHECK(value.get_den() == 1);
          CHECK(value >= 0);
          CHECK(value >= previous);
          previous = value;
        }
      }
    }
  }
}

TEST_CASE("generic period divides the shift denominator lcm") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const ZonotopeSpec z = testing::RandomZonotope(rng);
    const QuasiPolynomial q = EhrhartAlmostIntegral(z);
    const Integer lcm = z.shift.DenominatorLcm();
    CHECK(lcm % static_cast<unsigned long>(q.period()) == 0);
    // Integer translates do not change the counting function.
    std::vector<Rational> moved = z.shift.entries();
    for (Rational& x : moved) x += 3;
    CHECK(EhrhartAlmostIntegral(ZonotopeSpec(z.generators,
                                             RatVector(moved))) == q);
  }
}

}  // TEST_SUITE

}  // namespace
}  // namespace coxeter_ehrhart
