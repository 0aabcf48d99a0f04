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

// Ehrhart quasipolynomials of zonotopes.
//
// A zonotope v + Σ_{u in U} [0, u] with U integral and v rational tiles
// into half-open parallelepipeds, one per linearly independent W ⊆ U. Each
// tile of t·(v + Z(U)) holds vol(W)·t^|W| lattice points when the flat
// t·v + span(W) meets Z^d, and none otherwise. Summing over W gives the
// quasipolynomial; its period divides the lcm of the denominators of v.

#ifndef COXETER_EHRHART_ZONOTOPE_HPP_
#define COXETER_EHRHART_ZONOTOPE_HPP_

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <tuple>
#include <vector>

#include "coxeter_ehrhart/lattice.hpp"
#include "coxeter_ehrhart/quasi_polynomial.hpp"
#include "coxeter_ehrhart/roots.hpp"
#include "coxeter_ehrhart/signed_graph.hpp"

namespace coxeter_ehrhart {

// v + Σ[0, u]. Generators form a multiset: repeated vectors are distinct
// segments.
struct ZonotopeSpec {
  std::vector<IntVector> generators;
  RatVector shift;

  ZonotopeSpec(std::vector<IntVector> generators, RatVector shift);

  std::size_t dim() const { return shift.dim(); }
};

// Π^Z(Φ) = Σ[0, α].
ZonotopeSpec IntegralPermutahedron(RootFamily family, std::size_t n);
// Π(Φ) = -ρ + Σ[0, α], centered at the origin.
ZonotopeSpec StandardPermutahedron(RootFamily family, std::size_t n);

using SubsetVisitor = std::function<void(std::span<const std::size_t>)>;

// Visits every linearly independent subset of `generators` (as increasing
// index lists) exactly once, starting with the empty set, in depth-first
// lexicographic order. Dependent branches are pruned by incremental rank.
void ForEachIndependentSubset(std::span<const IntVector> generators,
                              std::size_t dim, const SubsetVisitor& visit);

std::vector<std::vector<std::size_t>> IndependentSubsets(
    std::span<const IntVector> generators, std::size_t dim);

QuasiPolynomial EhrhartAlmostIntegral(const ZonotopeSpec& zonotope);

struct ForestKey {
  std::size_t edge_count;
  std::size_t tc;
  std::size_t hc;
  std::size_t lc;
  std::size_t pc;
  bool all_trees_even;

  auto operator<=>(const ForestKey&) const = default;
};

// Number of Φ-forests per combinatorial type.
class ForestCensus {
 public:
  void Add(const ForestKey& key, const Integer& count = 1);
  const std::map<ForestKey, Integer>& counts() const { return counts_; }
  Integer Total() const;
  // Number of forests with the given number of edges.
  Integer CountWithEdges(std::size_t edges) const;

 private:
  std::map<ForestKey, Integer> counts_;
};

// Largest n accepted by the exhaustive subset enumeration, per family.
std::size_t MaxEnumerationSize(RootFamily family);

// Throws SizeLimitError above MaxEnumerationSize(family).
ForestCensus ComputeForestCensus(RootFamily family, std::size_t n);

// Σ_{G Φ-forest} 2^{pc+lc} t^{n - tc}.
QuasiPolynomial EhrhartIntegralFromCensus(const ForestCensus& census);
QuasiPolynomial EhrhartIntegralCoxeter(RootFamily family, std::size_t n);

// Integral case: the integral polynomial. Otherwise period 2 with
// constituent 0 (even t) Σ_F 2^{pc} t^{n-tc} and constituent 1 (odd t)
// Σ_E 2^{pc} t^{n-tc}, E being the forests whose tree components are even.
QuasiPolynomial EhrhartStandardFromCensus(const ForestCensus& census,
                                          bool integral);
QuasiPolynomial EhrhartStandardCoxeter(RootFamily family, std::size_t n);

}  // namespace coxeter_ehrhart

#endif  // COXETER_EHRHART_ZONOTOPE_HPP_
