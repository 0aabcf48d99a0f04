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

// Exponential generating functions for labeled (pseudo)trees and for the
// Ehrhart polynomials of Coxeter permutahedra, built on the Lambert series
// W(x) = Σ_{n≥1} (-n)^{n-1} x^n / n!.
//
// A forest is a set of components, so the EGF of forests weighted by
// component type is the exponential of the weighted sum of component EGFs.
// Weighting a forest on n vertices with k tree components by t^{n-k}
// amounts to substituting x -> t·x and weighting trees by 1/t.

#ifndef COXETER_EHRHART_EGF_HPP_
#define COXETER_EHRHART_EGF_HPP_

#include <cstddef>
#include <map>
#include <vector>

#include "coxeter_ehrhart/lattice.hpp"
#include "coxeter_ehrhart/roots.hpp"
#include "coxeter_ehrhart/series.hpp"

namespace coxeter_ehrhart {

RatSeries LambertW(std::size_t order);

// EGFs of connected component types, each as a series in x.
struct ComponentEgfs {
  RatSeries trees;                  // T:  n^{n-2}
  RatSeries pseudotrees;            // P:  unicyclic graphs
  RatSeries signed_trees;           // ST: 2^{n-1} n^{n-2}
  RatSeries signed_pseudotrees;     // SP: single unbalanced cycle
  RatSeries signed_halfedge_trees;  // SH = SL: (2n)^{n-1}
};

// T  = -W(-x) - W(-x)²/2
// P  = W(-x)/2 - W(-x)²/4 - log(1 + W(-x))/2
// ST = -W(-2x)/2 - W(-2x)²/4
// SP = (W(-2x) - log(1 + W(-2x)))/4
// SH = -W(-2x)/2
//
// SP comes from sp_n = 2^{n-1} p_n + st_n (n-1)/2 (sign patterns with an odd
// cycle, plus 2-cycles made by doubling a tree edge), i.e.
// SP(x) = P(2x)/2 + W(-2x)²/8.
ComponentEgfs ComputeComponentEgfs(std::size_t order);

// ehr_{Π^Z}(t) for n = 0..nmax coordinates, read off the exponential of
//   A: T(tx)/t
//   B: 2SP(tx) + ST(tx)/t + SH(tx)
//   C: 2SP(tx) + ST(tx)/t + 2SL(tx)
//   D: 2SP(tx) + ST(tx)/t
// For A the entry at n counts points of the polytope on n coordinates.
// `order` (default nmax) must be at least nmax.
std::vector<Integer> EgfEhrhartValues(RootFamily family, const Integer& t,
                                      std::size_t nmax, std::size_t order = 0);

// Odd-t values of the standard (non-integral) permutahedra, keyed by n:
//   A: even n only, from exp(T_even(tx)/t), T_even(x) = (T(x) + T(-x))/2
//   B: every n, from exp(2SP(tx) + ST_even(tx)/t + SH(tx))
// Rejects even t and families C, D.
std::map<std::size_t, Integer> EgfEhrhartStandardOdd(RootFamily family,
                                                     const Integer& t,
                                                     std::size_t nmax,
                                                     std::size_t order = 0);

// The closed forms in terms of W alone, used to cross-check the component
// assembly:
//   A: exp(-W(-tx)/t - W(-tx)²/(2t))
//   B: exp(-W(-2tx)/(2t) - W(-2tx)²/(4t)) / sqrt(1 + W(-2tx))
//   C: exp(-(t+1)W(-2tx)/(2t) - W(-2tx)²/(4t)) / sqrt(1 + W(-2tx))
//   D: exp((t-1)W(-2tx)/(2t) - W(-2tx)²/(4t)) / sqrt(1 + W(-2tx))
RatSeries IntegralClosedForm(RootFamily family, const Rational& t,
                             std::size_t order);
// Odd part, t odd:
//   A: exp(-(W(-tx) + W(tx))/(2t) - (W(-tx)² + W(tx)²)/(4t))
//   B: exp(-(W(-2tx) + W(2tx))/(4t) - (W(-2tx)² + W(2tx)²)/(8t))
//        / sqrt(1 + W(-2tx))
RatSeries StandardOddClosedForm(RootFamily family, const Rational& t,
                                std::size_t order);

}  // namespace coxeter_ehrhart

#endif  // COXETER_EHRHART_EGF_HPP_
