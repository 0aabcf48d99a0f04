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

#include "coxeter_ehrhart/zonotope.hpp"

#include <stdexcept>
#include <string>

namespace coxeter_ehrhart {

ZonotopeSpec::ZonotopeSpec(std::vector<IntVector> gens, RatVector v)
    : generators(std::move(gens)), shift(std::move(v)) {
  RequireDimension(generators, shift.dim());
  for (const IntVector& u : generators) {
    if (u.IsZero()) throw std::invalid_argument("zero generator");
  }
}

ZonotopeSpec IntegralPermutahedron(RootFamily family, std::size_t n) {
  return ZonotopeSpec(PositiveRoots(family, n).roots, RatVector(n));
}

ZonotopeSpec StandardPermutahedron(RootFamily family, std::size_t n) {
  return ZonotopeSpec(PositiveRoots(family, n).roots,
                      CenteringShift(family, n));
}

namespace {

void Extend(std::span<const IntVector> gens, std::size_t next,
            EchelonBasis& basis, std::vector<std::size_t>& chosen,
            const SubsetVisitor& visit) {
  visit(chosen);
  for (std::size_t i = next; i < gens.size(); ++i) {
    if (!basis.TryAdd(gens[i])) continue;
    chosen.push_back(i);
    Extend(gens, i + 1, basis, chosen, visit);
    chosen.pop_back();
    basis.Pop();
  }
}

}  // namespace

void ForEachIndependentSubset(std::span<const IntVector> generators,
                              std::size_t dim, const SubsetVisitor& visit) {
  RequireDimension(generators, dim);
  EchelonBasis basis(dim);
  std::vector<std::size_t> chosen;
  Extend(generators, 0, basis, chosen, visit);
}

std::vector<std::vector<std::size_t>> IndependentSubsets(
    std::span<const IntVector> generators, std::size_t dim) {
  std::vector<std::vector<std::size_t>> out;
  ForEachIndependentSubset(generators, dim,
                           [&](std::span<const std::size_t> s) {
                             out.emplace_back(s.begin(), s.end());
                           });
  return out;
}

QuasiPolynomial EhrhartAlmostIntegral(const ZonotopeSpec& zonotope) {
  const Integer c = zonotope.shift.DenominatorLcm();
  if (!c.fits_ulong_p() || c > 1000000) {
    throw SizeLimitError("shift denominator lcm " + c.get_str() +
                         " is too large for residue enumeration");
  }
  const std::size_t period = c.get_ui();
  // Smallest positive representative of each residue class.
  std::vector<Integer> reps(period);
  for (std::size_t r = 0; r < period; ++r) reps[r] = r == 0 ? period : r;

  std::vector<Polynomial> constituents(
      period, Polynomial(zonotope.generators.size() + 1, 0));
  std::vector<IntVector> w;
  ForEachIndependentSubset(
      zonotope.generators, zonotope.dim(),
      [&](std::span<const std::size_t> subset) {
        w.clear();
        for (std::size_t i : subset) w.push_back(zonotope.generators[i]);
        const Integer vol = w.empty() ? Integer(1) : RelativeVolume(w);
        const auto kernel = IntegerKernelBasis(w, zonotope.dim());
        for (std::size_t r = 0; r < period; ++r) {
          if (FlatMeetsLattice(zonotope.shift, kernel, reps[r])) {
            constituents[r][w.size()] += vol;
          }
        }
      });
  return QuasiPolynomial(std::move(constituents)).Minimized();
}

void ForestCensus::Add(const ForestKey& key, const Integer& count) {
  counts_[key] += count;
}

Integer ForestCensus::Total() const {
  Integer total = 0;
  for (const auto& [key, count] : counts_) total += count;
  return total;
}

Integer ForestCensus::CountWithEdges(std::size_t edges) const {
  Integer total = 0;
  for (const auto& [key, count] : counts_) {
    if (key.edge_count == edges) total += count;
  }
  return total;
}

std::size_t MaxEnumerationSize(RootFamily family) {
  return family == RootFamily::kA ? 8 : 7;
}

ForestCensus ComputeForestCensus(RootFamily family, std::size_t n) {
  if (n > MaxEnumerationSize(family)) {
    throw SizeLimitError("exhaustive enumeration for family " +
                         std::string(1, FamilyLetter(family)) +
                         " is limited to n <= " +
                         std::to_string(MaxEnumerationSize(family)));
  }
  const PositiveRootSet roots = PositiveRoots(family, n);
  std::vector<SignedEdge> edges;
  edges.reserve(roots.roots.size());
  for (const IntVector& r : roots.roots) edges.push_back(EdgeFromRoot(r));

  ForestCensus census;
  ForEachIndependentSubset(
      roots.roots, n, [&](std::span<const std::size_t> subset) {
        SignedGraph g(n);
        for (std::size_t i : subset) g.Add(edges[i]);
        const auto stats = Classify(g);
        if (!stats) {
          throw std::logic_error("independent root subset is not a forest");
        }
        census.Add(ForestKey{stats->edge_count, stats->tc, stats->hc,
                             stats->lc, stats->pc, stats->all_trees_even});
      });
  return census;
}

namespace {

Integer PowerOfTwo(std::size_t k) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, k);
  return p;
}

std::size_t MaxEdges(const ForestCensus& census) {
  std::size_t m = 0;
  for (const auto& [key, count] : census.counts()) {
    m = std::max(m, key.edge_count);
  }
  return m;
}

}  // namespace

QuasiPolynomial EhrhartIntegralFromCensus(const ForestCensus& census) {
  Polynomial p(MaxEdges(census) + 1, 0);
  for (const auto& [key, count] : census.counts()) {
    p[key.edge_count] += count * PowerOfTwo(key.pc + key.lc);
  }
  return QuasiPolynomial(std::move(p));
}

QuasiPolynomial EhrhartIntegralCoxeter(RootFamily family, std::size_t n) {
  return EhrhartIntegralFromCensus(ComputeForestCensus(family, n));
}

QuasiPolynomial EhrhartStandardFromCensus(const ForestCensus& census,
                                          bool integral) {
  if (integral) return EhrhartIntegralFromCensus(census);
  Polynomial even(MaxEdges(census) + 1, 0);
  Polynomial odd(MaxEdges(census) + 1, 0);
  for (const auto& [key, count] : census.counts()) {
    if (key.lc != 0) {
      throw std::logic_error("loop components in a non-integral family");
    }
    const Integer weight = count * PowerOfTwo(key.pc);
    even[key.edge_count] += weight;
    if (key.all_trees_even) odd[key.edge_count] += weight;
  }
  return QuasiPolynomial(std::vector<Polynomial>{even, odd}).Minimized();
}

QuasiPolynomial EhrhartStandardCoxeter(RootFamily family, std::size_t n) {
  return EhrhartStandardFromCensus(ComputeForestCensus(family, n),
                                   IsIntegral(family, n));
}

}  // namespace coxeter_ehrhart
