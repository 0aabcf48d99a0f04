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


#include "coxeter_ehrhart/egf.hpp"
#include "coxeter_ehrhart/oracle.hpp"
#include "coxeter_ehrhart/series.hpp"
#include "coxeter_ehrhart/zonotope.hpp"
#include "doctest.h"
#include "test_support.hpp"

namespace coxeter_ehrhart {
namespace {

constexpr RootFamily kFamilies[] = {RootFamily::kA, RootFamily::kB,
                                    RootFamily::kC, RootFamily::kD};

RatSeries Series(std::vector<Rational> c) {
  const std::size_t order = c.size() - 1;
  return RatSeries(order, std::move(c));
}

Rational Q(long p, long q = 1) { return Rational(p, q); }

TEST_SUITE("series") {

TEST_CASE("elementary series") {
  const RatSeries x = RatSeries::X(3);
  CHECK(Exp(x) == Series({Q(1), Q(1), Q(1, 2), Q(1, 6)}));
  CHECK(Log1p(x) == Series({Q(0), Q(1), Q(-1, 2), Q(1, 3)}));
  CHECK(Rpow1p(RatSeries::X(2), Q(-1, 2)) ==
        Series({Q(1), Q(-1, 2), Q(3, 8)}));
  CHECK(Rpow1p(RatSeries::X(4), Q(2)) ==
        Series({Q(1), Q(2), Q(1), Q(0), Q(0)}));
}

TEST_CASE("arithmetic") {
  const RatSeries f = Series({Q(1), Q(2), Q(3)});
  const RatSeries g = Series({Q(0), Q(1), Q(-1)});
  CHECK(f + g == Series({Q(1), Q(3), Q(2)}));
  CHECK(f - g == Series({Q(1), Q(1), Q(4)}));
  CHECK(f * g == Series({Q(0), Q(1), Q(1)}));
  CHECK(-g == Series({Q(0), Q(-1), Q(1)}));
  CHECK(Q(2) * g == Series({Q(0), Q(2), Q(-2)}));
  CHECK(ScaleArgument(f, Q(-2)) == Series({Q(1), Q(-4), Q(12)}));
  CHECK(Derivative(f) == Series({Q(2), Q(6), Q(0)}));
  CHECK(Integral(f) == Series({Q(0), Q(1), Q(1)}));
  CHECK(Inverse(f) * f == RatSeries::Constant(2, 1));
  CHECK_THROWS_AS(f + RatSeries::X(3), std::invalid_argument);
  CHECK_THROWS(Exp(f));
  CHECK(RatSeries::X(5).EgfCoefficient(1) == 1);
  CHECK(Series({Q(0), Q(0), Q(0), Q(1, 3)}).EgfCoefficient(3) == 2);
}

TEST_CASE("exp and log1p are inverse") {
  const RatSeries u = Series({Q(0), Q(3, 2), Q(-1), Q(2, 7), Q(5), Q(0),
                              Q(1, 9)});
  CHECK(Log1p(Exp(u) - RatSeries::Constant(6, 1)) == u);
  CHECK(Rpow1p(u, Q(1, 2)) * Rpow1p(u, Q(1, 2)) ==
        RatSeries::Constant(6, 1) + u);
}

}  // TEST_SUITE

TEST_SUITE("egf") {

TEST_CASE("Lambert W coefficients") {
  const RatSeries w = LambertW(4);
  CHECK(w[0] == 0);
  CHECK(w[1] == 1);
  CHECK(w[2] == -1);
  CHECK(w[3] == Q(3, 2));
  CHECK(w[4] == Q(-8, 3));
}

TEST_CASE("Lambert W defining identity") {
  for (std::size_t order = 1; order <= 12; ++order) {
    const RatSeries w = LambertW(order);
    CHECK(w * Exp(w) == RatSeries::X(order));
  }
}

TEST_CASE("rooted trees") {
  const RatSeries r = -ScaleArgument(LambertW(6), -1);
  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(r.EgfCoefficient(n) ==
          Rational(testing::Power(static_cast<long>(n), n - 1)));
  }
}

TEST_CASE("component closed forms") {
  const ComponentEgfs c = ComputeComponentEgfs(8);
  for (std::size_t n = 1; n <= 8; ++n) {
    CAPTURE(n);
    const Integer tn = n == 1 ? Integer(1)
                              : testing::Power(static_cast<long>(n), n - 2);
    CHECK(c.trees.EgfCoefficient(n) == Rational(tn));
    CHECK(c.signed_trees.EgfCoefficient(n) ==
          Rational(testing::Power(2, n - 1) * tn));
    CHECK(c.signed_halfedge_trees.EgfCoefficient(n) ==
          Rational(testing::Power(2 * static_cast<long>(n), n - 1)));
  }
  CHECK(c.trees.EgfCoefficient(4) == 16);
  CHECK(c.pseudotrees.EgfCoefficient(3) == 1);
  CHECK(c.pseudotrees.EgfCoefficient(4) == 15);
  CHECK(c.signed_pseudotrees.EgfCoefficient(1) == 0);
  CHECK(c.signed_pseudotrees.EgfCoefficient(2) == 1);
  CHECK(c.signed_pseudotrees.EgfCoefficient(3) == 16);
  CHECK(c.signed_pseudotrees.EgfCoefficient(4) == 312);
}

TEST_CASE("signed pseudotree recurrence") {
  const ComponentEgfs c = ComputeComponentEgfs(8);
  for (std::size_t n = 1; n <= 8; ++n) {
    const Rational expected =
        Rational(testing::Power(2, n - 1)) * c.pseudotrees.EgfCoefficient(n) +
        c.signed_trees.EgfCoefficient(n) * Rational(n - 1, 2);
    CHECK(c.signed_pseudotrees.EgfCoefficient(n) == expected);
  }
}

TEST_CASE("component coefficients are nonnegative integers") {
  const ComponentEgfs c = ComputeComponentEgfs(10);
  for (const RatSeries* s :
       {&c.trees, &c.pseudotrees, &c.signed_trees, &c.signed_pseudotrees,
        &c.signed_halfedge_trees}) {
    for (std::size_t n = 0; n <= 10; ++n) {
      const Rational v = s->EgfCoefficient(n);
      CHECK(v.get_den() == 1);
      CHECK(v >= 0);
    }
  }
}

TEST_CASE("component counts match brute force") {
  const ComponentEgfs c = ComputeComponentEgfs(5);
  for (std::size_t n = 1; n <= 5; ++n) {
    CHECK(c.trees.EgfCoefficient(n) ==
          Rational(BruteForceStructures(StructureKind::kTree, n)));
    CHECK(c.pseudotrees.EgfCoefficient(n) ==
          Rational(BruteForceStructures(StructureKind::kPseudotree, n)));
  }
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(c.signed_trees.EgfCoefficient(n) ==
          Rational(BruteForceStructures(StructureKind::kSignedTree, n)));
    CHECK(c.signed_pseudotrees.EgfCoefficient(n) ==
          Rational(BruteForceStructures(StructureKind::kSignedPseudotree, n)));
    CHECK(c.signed_halfedge_trees.EgfCoefficient(n) ==
          Rational(BruteForceStructures(StructureKind::kSignedHalfedgeTree, n)));
    CHECK(c.signed_halfedge_trees.EgfCoefficient(n) ==
          Rational(BruteForceStructures(StructureKind::kSignedLoopTree, n)));
  }
}

TEST_CASE("Ehrhart value examples") {
  CHECK(EgfEhrhartValues(RootFamily::kA, 1, 3)[3] == 7);
  CHECK(EgfEhrhartValues(RootFamily::kB, 2, 2)[2] == 37);
  CHECK(EgfEhrhartValues(RootFamily::kD, 1, 4)[4] == 1001);
  CHECK(EgfEhrhartStandardOdd(RootFamily::kA, 1, 4).at(4) == 19);
  CHECK(EgfEhrhartStandardOdd(RootFamily::kB, 1, 2).at(2) == 9);
  CHECK(EgfEhrhartStandardOdd(RootFamily::kB, 3, 3).at(3) == 2403);
  CHECK(EgfEhrhartValues(RootFamily::kC, 5, 0)[0] == 1);
}

TEST_CASE("Ehrhart value guards") {
  CHECK_THROWS_AS(EgfEhrhartValues(RootFamily::kA, 0, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(EgfEhrhartValues(RootFamily::kA, 1, 5, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(EgfEhrhartStandardOdd(RootFamily::kB, 2, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(EgfEhrhartStandardOdd(RootFamily::kC, 1, 3),
                  std::invalid_argument);
  const auto odd_a = EgfEhrhartStandardOdd(RootFamily::kA, 1, 6);
  for (const auto& [n, v] : odd_a) CHECK(n % 2 == 0);
}

TEST_CASE("EGF values match the forest route") {
  for (RootFamily f : kFamilies) {
    const auto nmax = 5;
    for (long t = 1; t <= 4; ++t) {
      const auto values = EgfEhrhartValues(f, t, nmax);
      for (std::size_t n = 1; n <= nmax; ++n) {
        CHECK(Rational(values[n]) == EhrhartIntegralCoxeter(f, n).Evaluate(t));
      }
    }
  }
  for (long t : {1L, 3L}) {
    for (const auto& [n, v] : EgfEhrhartStandardOdd(RootFamily::kA, t, 4)) {
      if (n == 0) continue;
      CHECK(Rational(v) == EhrhartStandardCoxeter(RootFamily::kA, n).Evaluate(t));
    }
    for (const auto& [n, v] : EgfEhrhartStandardOdd(RootFamily::kB, t, 4)) {
      if (n == 0) continue;
      CHECK(Rational(v) == EhrhartStandardCoxeter(RootFamily::kB, n).Evaluate(t));
    }
  }
}

TEST_CASE("closed forms agree with the component exponentials") {
  const std::size_t order = 8;
  for (RootFamily f : kFamilies) {
    for (long t = 1; t <= 3; ++t) {
      const RatSeries closed = IntegralClosedForm(f, t, order);
      const auto values = EgfEhrhartValues(f, t, order);
      for (std::size_t n = 0; n <= order; ++n) {
        CHECK(closed.EgfCoefficient(n) == Rational(values[n]));
      }
    }
  }
  const ComponentEgfs c = ComputeComponentEgfs(order);
  for (long t = 1; t <= 3; ++t) {
    const Rational tq(t);
    const RatSeries exponent =
        Q(2) * ScaleArgument(c.signed_pseudotrees, tq) +
        (1 / tq) * ScaleArgument(c.signed_trees, tq) +
        ScaleArgument(c.signed_halfedge_trees, tq);
    CHECK(Exp(exponent) == IntegralClosedForm(RootFamily::kB, tq, order));
  }
  for (RootFamily f : {RootFamily::kA, RootFamily::kB}) {
    for (long t : {1L, 3L, 5L}) {
      const RatSeries closed = StandardOddClosedForm(f, t, order);
      const auto odd = EgfEhrhartStandardOdd(f, t, order);
      for (std::size_t n = 0; n <= order; ++n) {
        const auto it = odd.find(n);
        const Rational expected = it == odd.end() ? Q(0) : Rational(it->second);
        CHECK(closed.EgfCoefficient(n) == expected);
      }
    }
  }
}

TEST_CASE("large n through the series route") {
  const auto values = EgfEhrhartValues(RootFamily::kC, 1, 20);
  CHECK(values[1] == 3);
  CHECK(values[2] == 21);
  for (const Integer& v : values) CHECK(v > 0);
}

}  // TEST_SUITE

}  // namespace
}  // namespace coxeter_ehrhart
