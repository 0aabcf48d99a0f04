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

#include "coxeter_ehrhart/oracle.hpp"

#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

#include "coxeter_ehrhart/signed_graph.hpp"

namespace coxeter_ehrhart {

std::string Violation::ToString() const {
  switch (kind) {
    case Kind::kAffineHull:
      return "<" + normal.ToString() + ", p> = " + value.get_str() +
             " != " + RationalToString(bound);
    case Kind::kUpper:
      return "<" + normal.ToString() + ", p> = " + value.get_str() + " > " +
             RationalToString(bound);
    case Kind::kLower:
      return "<" + normal.ToString() + ", p> = " + value.get_str() + " < " +
             RationalToString(bound);
  }
  return "?";
}

namespace {

IntVector Primitive(IntVector v) {
  Integer g = 0;
  for (const Integer& e : v.entries()) g = gcd(g, e);
  if (g == 0) return v;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (v[i] != 0) {
      if (v[i] < 0) g = -g;
      break;
    }
  }
  for (std::size_t i = 0; i < v.dim(); ++i) v[i] /= g;
  return v;
}

template <typename Fn>
void ForEachCombination(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

ZonotopeMembership::ZonotopeMembership(const ZonotopeSpec& zonotope,
                                       const Integer& t)
    : dim_(zonotope.dim()) {
  if (t <= 0) throw std::invalid_argument("dilation t must be positive");
  const auto& gens = zonotope.generators;
  const RatVector tv = zonotope.shift.Scaled(t);

  for (IntVector& f : IntegerKernelBasis(gens, dim_)) {
    Rational target = Dot(f, tv);
    equations_.push_back(Equation{std::move(f), std::move(target)});
  }

  std::vector<IntVector> basis;
  {
    EchelonBasis echelon(dim_);
    for (const IntVector& u : gens) {
      if (echelon.TryAdd(u)) basis.push_back(u);
    }
  }
  const std::size_t rank = basis.size();
  if (rank == 0) return;

  std::set<IntVector> normals;
  ForEachCombination(gens.size(), rank - 1,
                     [&](const std::vector<std::size_t>& subset) {
    EchelonBasis echelon(dim_);
    std::vector<IntVector> gram;
    for (std::size_t i : subset) {
      if (!echelon.TryAdd(gens[i])) return;
      IntVector row(rank);
      for (std::size_t j = 0; j < rank; ++j) row[j] = Dot(gens[i], basis[j]);
      gram.push_back(std::move(row));
    }
    // The normal inside span(U): h = Σ c_j b_j with <h, u_i> = 0 on the subset.
    const auto coeffs = IntegerKernelBasis(gram, rank);
    if (coeffs.size() != 1) {
      throw std::logic_error("facet normal is not unique");
    }
    IntVector h(dim_);
    for (std::size_t j = 0; j < rank; ++j) h = h + coeffs[0][j] * basis[j];
    normals.insert(Primitive(std::move(h)));
  });

  for (const IntVector& h : normals) {
    Integer plus = 0;
    Integer minus = 0;
    for (const IntVector& u : gens) {
      Integer d = Dot(h, u);
      if (d > 0) plus += d;
      else minus += d;
    }
    const Rational base = Dot(h, tv);
    Rational lower = base + Rational(t * minus);
    Rational upper = base + Rational(t * plus);
    inequalities_.push_back(Inequality{h, lower, upper});
  }
}

MembershipCertificate ZonotopeMembership::Contains(const IntVector& p) const {
  if (p.dim() != dim_) throw DimensionError("point dimension mismatch");
  MembershipCertificate cert;
  for (const Equation& e : equations_) {
    Integer value = Dot(e.normal, p);
    if (Rational(value) != e.target) {
      cert.violations.push_back(
          {Violation::Kind::kAffineHull, e.normal, value, e.target});
    }
  }
  for (const Inequality& q : inequalities_) {
    Integer value = Dot(q.normal, p);
    if (Rational(value) > q.upper) {
      cert.violations.push_back(
          {Violation::Kind::kUpper, q.normal, value, q.upper});
    } else if (Rational(value) < q.lower) {
      cert.violations.push_back(
          {Violation::Kind::kLower, q.normal, value, q.lower});
    }
  }
  cert.verdict = cert.violations.empty();
  return cert;
}

MembershipCertificate ZonotopeContains(const ZonotopeSpec& zonotope,
                                       const Integer& t, const IntVector& p) {
  return ZonotopeMembership(zonotope, t).Contains(p);
}

namespace {

Integer Floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer Ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

// A constraint lower <= <normal, q> <= upper on box offsets q, in int64.
struct FastConstraint {
  std::vector<std::int64_t> normal;
  std::int64_t lower;
  std::int64_t upper;
};

const Integer& ScanLimit() {
  static const Integer limit = Integer(1) << 62;
  return limit;
}

// Converts an integer constraint on p = corner + q into one on q. Returns
// false if no q in the box can satisfy it.
bool MakeFast(const IntVector& normal, const Integer& lower,
              const Integer& upper, const IntVector& corner,
              const std::vector<Integer>& widths, FastConstraint* out) {
  Integer reach = 0;
  for (std::size_t i = 0; i < normal.dim(); ++i) {
    reach += abs(normal[i]) * widths[i];
  }
  if (reach >= ScanLimit()) {
    throw SizeLimitError("facet normal too large for the box scan");
  }
  const Integer offset = Dot(normal, corner);
  Integer lo = lower - offset;
  Integer hi = upper - offset;
  if (lo > reach || hi < -reach || lo > hi) return false;
  if (lo < -reach) lo = -reach;
  if (hi > reach) hi = reach;
  out->normal.assign(normal.dim(), 0);
  for (std::size_t i = 0; i < normal.dim(); ++i) {
    if (widths[i] != 0) out->normal[i] = normal[i].get_si();
  }
  out->lower = lo.get_si();
  out->upper = hi.get_si();
  return true;
}

}  // namespace

Integer CountPoints(const ZonotopeSpec& zonotope, const Integer& t,
                    std::uint64_t max_box) {
  if (t <= 0) throw std::invalid_argument("dilation t must be positive");
  const std::size_t d = zonotope.dim();
  const RatVector tv = zonotope.shift.Scaled(t);

  // t·v + Σ[0, t·u] lies in the box [t v_i + t Σ min(u_i, 0),
  // t v_i + t Σ max(u_i, 0)] coordinatewise.
  IntVector corner(d);
  std::vector<Integer> widths(d);
  Integer box = 1;
  for (std::size_t i = 0; i < d; ++i) {
    Integer neg = 0;
    Integer pos = 0;
    for (const IntVector& u : zonotope.generators) {
      if (u[i] < 0) neg += u[i];
      else pos += u[i];
    }
    const Integer lo = Ceil(tv[i] + Rational(t * neg));
    const Integer hi = Floor(tv[i] + Rational(t * pos));
    if (lo > hi) return 0;
    corner[i] = lo;
    widths[i] = hi - lo;
    box *= widths[i] + 1;
  }
  if (box > Integer(std::to_string(max_box))) {
    throw SizeLimitError("bounding box has " + box.get_str() +
                         " points, above the ceiling of " +
                         std::to_string(max_box));
  }

  const ZonotopeMembership membership(zonotope, t);
  std::vector<FastConstraint> constraints;
  for (const auto& e : membership.equations()) {
    if (e.target.get_den() != 1) return 0;
    FastConstraint c;
    if (!MakeFast(e.normal, e.target.get_num(), e.target.get_num(), corner,
                  widths, &c)) {
      return 0;
    }
    constraints.push_back(std::move(c));
  }
  for (const auto& q : membership.inequalities()) {
    FastConstraint c;
    if (!MakeFast(q.normal, Ceil(q.lower), Floor(q.upper), corner, widths,
                  &c)) {
      return 0;
    }
    constraints.push_back(std::move(c));
  }

  std::vector<std::int64_t> limit(d);
  for (std::size_t i = 0; i < d; ++i) limit[i] = widths[i].get_si();
  std::vector<std::int64_t> q(d, 0);
  std::uint64_t count = 0;
  while (true) {
    bool inside = true;
    for (const FastConstraint& c : constraints) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < d; ++i) s += c.normal[i] * q[i];
      if (s < c.lower || s > c.upper) {
        inside = false;
        break;
      }
    }
    if (inside) ++count;
    std::size_t i = 0;
    while (i < d && q[i] == limit[i]) q[i++] = 0;
    if (i == d) break;
    ++q[i];
  }
  return Integer(std::to_string(count));
}

StructureKind ParseStructureKind(const std::string& text) {
  for (StructureKind k :
       {StructureKind::kTree, StructureKind::kPseudotree,
        StructureKind::kSignedTree, StructureKind::kSignedHalfedgeTree,
        StructureKind::kSignedLoopTree, StructureKind::kSignedPseudotree}) {
    if (StructureKindName(k) == text) return k;
  }
  throw std::invalid_argument("unknown structure kind \"" + text + "\"");
}

std::string StructureKindName(StructureKind kind) {
  switch (kind) {
    case StructureKind::kTree:
      return "tree";
    case StructureKind::kPseudotree:
      return "pseudotree";
    case StructureKind::kSignedTree:
      return "signed_tree";
    case StructureKind::kSignedHalfedgeTree:
      return "signed_halfedge_tree";
    case StructureKind::kSignedLoopTree:
      return "signed_loop_tree";
    case StructureKind::kSignedPseudotree:
      return "signed_pseudotree";
  }
  return "?";
}

std::size_t MaxStructureSize(StructureKind kind) {
  return kind == StructureKind::kTree || kind == StructureKind::kPseudotree
             ? 5
             : 4;
}

Integer BruteForceStructures(StructureKind kind, std::size_t n) {
  if (n > MaxStructureSize(kind)) {
    throw SizeLimitError("brute-force " + StructureKindName(kind) +
                         " enumeration is limited to n <= " +
                         std::to_string(MaxStructureSize(kind)));
  }
  if (n == 0) return 0;
  const bool signed_kind =
      kind != StructureKind::kTree && kind != StructureKind::kPseudotree;
  std::vector<SignedEdge> items;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      items.push_back(SignedEdge::Positive(i, j));
      if (signed_kind) items.push_back(SignedEdge::Negative(i, j));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (kind == StructureKind::kSignedHalfedgeTree) {
      items.push_back(SignedEdge::Halfedge(i));
    }
    if (kind == StructureKind::kSignedLoopTree) {
      items.push_back(SignedEdge::Loop(i));
    }
  }

  std::uint64_t count = 0;
  const std::uint64_t subsets = std::uint64_t{1} << items.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    // A connected structure on n vertices has at most n items.
    if (static_cast<std::size_t>(std::popcount(mask)) > n) continue;
    SignedGraph g(n);
    for (std::size_t b = 0; b < items.size(); ++b) {
      if (mask & (std::uint64_t{1} << b)) g.Add(items[b]);
    }
    const auto components = Components(g);
    if (components.size() != 1) continue;
    const ComponentShape& c = components.front();
    bool match = false;
    if (kind == StructureKind::kPseudotree) {
      match = c.cycles == 1;
    } else {
      const auto type = ClassifyComponent(c);
      if (!type) continue;
      switch (kind) {
        case StructureKind::kTree:
        case StructureKind::kSignedTree:
          match = *type == ComponentType::kTree;
          break;
        case StructureKind::kSignedHalfedgeTree:
          match = *type == ComponentType::kHalfedgeTree;
          break;
        case StructureKind::kSignedLoopTree:
          match = *type == ComponentType::kLoopTree;
          break;
        case StructureKind::kSignedPseudotree:
          match = *type == ComponentType::kPseudotree;
          break;
        case StructureKind::kPseudotree:
          break;
      }
    }
    if (match) ++count;
  }
  return Integer(std::to_string(count));
}

}  // namespace coxeter_ehrhart
