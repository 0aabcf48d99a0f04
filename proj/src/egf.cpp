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

#include <stdexcept>
#include <string>

namespace coxeter_ehrhart {

RatSeries LambertW(std::size_t order) {
  if (order < 1) throw std::invalid_argument("Lambert series needs order >= 1");
  RatSeries w(order);
  for (std::size_t n = 1; n <= order; ++n) {
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), n, n - 1);
    if ((n - 1) % 2 == 1) power = -power;
    Integer fact;
    mpz_fac_ui(fact.get_mpz_t(), n);
    w[n] = Rational(power, fact);
    w[n].canonicalize();
  }
  return w;
}

ComponentEgfs ComputeComponentEgfs(std::size_t order) {
  const RatSeries w = LambertW(order);
  const RatSeries w1 = ScaleArgument(w, -1);  // W(-x)
  const RatSeries w2 = ScaleArgument(w, -2);  // W(-2x)
  const RatSeries w1_sq = w1 * w1;
  const RatSeries w2_sq = w2 * w2;
  const Rational half(1, 2);
  const Rational quarter(1, 4);
  return ComponentEgfs{
      .trees = -w1 - half * w1_sq,
      .pseudotrees = half * w1 - quarter * w1_sq - half * Log1p(w1),
      .signed_trees = -half * w2 - quarter * w2_sq,
      .signed_pseudotrees = quarter * (w2 - Log1p(w2)),
      .signed_halfedge_trees = -half * w2,
  };
}

namespace {

void RequirePositive(const Integer& t) {
  if (t <= 0) throw std::invalid_argument("dilation t must be positive");
}

std::size_t ResolveOrder(std::size_t nmax, std::size_t order) {
  if (order == 0) return std::max<std::size_t>(nmax, 1);
  if (order < nmax) {
    throw std::invalid_argument("series order " + std::to_string(order) +
                                " is below the requested n = " +
                                std::to_string(nmax));
  }
  return order;
}

Integer ToInteger(const Rational& q) {
  if (q.get_den() != 1) {
    throw std::logic_error("non-integral generating function coefficient " +
                           RationalToString(q));
  }
  return q.get_num();
}

// Even part f_even(x) = (f(x) + f(-x))/2.
RatSeries EvenPart(const RatSeries& f) {
  return Rational(1, 2) * (f + ScaleArgument(f, -1));
}

RatSeries IntegralExponent(RootFamily family, const ComponentEgfs& c,
                           const Rational& t) {
  const Rational inv_t = 1 / t;
  const RatSeries trees = inv_t * ScaleArgument(c.signed_trees, t);
  const RatSeries pseudo = 2 * ScaleArgument(c.signed_pseudotrees, t);
  const RatSeries halfedge = ScaleArgument(c.signed_halfedge_trees, t);
  switch (family) {
    case RootFamily::kA:
      return inv_t * ScaleArgument(c.trees, t);
    case RootFamily::kB:
      return pseudo + trees + halfedge;
    case RootFamily::kC:
      // Loop-trees have the same count as halfedge-trees and weight 2.
      return pseudo + trees + 2 * halfedge;
    case RootFamily::kD:
      return pseudo + trees;
  }
  throw std::logic_error("unknown family");
}

}  // namespace

std::vector<Integer> EgfEhrhartValues(RootFamily family, const Integer& t,
                                      std::size_t nmax, std::size_t order) {
  RequirePositive(t);
  order = ResolveOrder(nmax, order);
  const ComponentEgfs c = ComputeComponentEgfs(order);
  const RatSeries gf = Exp(IntegralExponent(family, c, Rational(t)));
  std::vector<Integer> values;
  values.reserve(nmax + 1);
  for (std::size_t n = 0; n <= nmax; ++n) {
    values.push_back(ToInteger(gf.EgfCoefficient(n)));
  }
  return values;
}

std::map<std::size_t, Integer> EgfEhrhartStandardOdd(RootFamily family,
                                                     const Integer& t,
                                                     std::size_t nmax,
                                                     std::size_t order) {
  RequirePositive(t);
  if (t % 2 == 0) {
    throw std::invalid_argument("odd-part generating function needs odd t");
  }
  if (family != RootFamily::kA && family != RootFamily::kB) {
    throw std::invalid_argument(
        "families C and D are integral; use the integral generating function");
  }
  order = ResolveOrder(nmax, order);
  const ComponentEgfs c = ComputeComponentEgfs(order);
  const Rational tq(t);
  const Rational inv_t = 1 / tq;
  RatSeries exponent(order);
  if (family == RootFamily::kA) {
    exponent = inv_t * ScaleArgument(EvenPart(c.trees), tq);
  } else {
    // Halfedge-trees carry weight 1, as in the integral B series.
    exponent = 2 * ScaleArgument(c.signed_pseudotrees, tq) +
               inv_t * ScaleArgument(EvenPart(c.signed_trees), tq) +
               ScaleArgument(c.signed_halfedge_trees, tq);
  }
  const RatSeries gf = Exp(exponent);
  std::map<std::size_t, Integer> values;
  for (std::size_t n = 0; n <= nmax; ++n) {
    if (family == RootFamily::kA && n % 2 == 1) continue;
    values.emplace(n, ToInteger(gf.EgfCoefficient(n)));
  }
  return values;
}

RatSeries IntegralClosedForm(RootFamily family, const Rational& t,
                             std::size_t order) {
  const RatSeries w = LambertW(order);
  if (family == RootFamily::kA) {
    const RatSeries wt = ScaleArgument(w, -t);
    return Exp(-(1 / t) * wt - (1 / (2 * t)) * (wt * wt));
  }
  const RatSeries w2t = ScaleArgument(w, -2 * t);
  Rational linear;
  switch (family) {
    case RootFamily::kB:
      linear = -1 / (2 * t);
      break;
    case RootFamily::kC:
      linear = (-t - 1) / (2 * t);
      break;
    default:
      linear = (t - 1) / (2 * t);
      break;
  }
  return Exp(linear * w2t - (1 / (4 * t)) * (w2t * w2t)) *
         Rpow1p(w2t, Rational(-1, 2));
}

RatSeries StandardOddClosedForm(RootFamily family, const Rational& t,
                                std::size_t order) {
  const RatSeries w = LambertW(order);
  if (family == RootFamily::kA) {
    const RatSeries wm = ScaleArgument(w, -t);
    const RatSeries wp = ScaleArgument(w, t);
    return Exp(-(1 / (2 * t)) * (wm + wp) -
               (1 / (4 * t)) * (wm * wm + wp * wp));
  }
  if (family != RootFamily::kB) {
    throw std::invalid_argument("odd-part closed form exists for A and B only");
  }
  const RatSeries wm = ScaleArgument(w, -2 * t);
  const RatSeries wp = ScaleArgument(w, 2 * t);
  return Exp(-(1 / (4 * t)) * (wm + wp) -
             (1 / (8 * t)) * (wm * wm + wp * wp)) *
         Rpow1p(wm, Rational(-1, 2));
}

}  // namespace coxeter_ehrhart
