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

// Brute-force ground truth: lattice-point counting by scanning a bounding
// box, and enumeration of small labeled structures.

#ifndef COXETER_EHRHART_ORACLE_HPP_
#define COXETER_EHRHART_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "coxeter_ehrhart/lattice.hpp"
#include "coxeter_ehrhart/zonotope.hpp"

namespace coxeter_ehrhart {

inline constexpr std::uint64_t kDefaultMaxBox = 10'000'000;

struct Violation {
  enum class Kind { kAffineHull, kUpper, kLower };
  Kind kind;
  IntVector normal;
  // <normal, p> and the bound it failed (equality target for kAffineHull).
  Integer value;
  Rational bound;

  std::string ToString() const;
};

struct MembershipCertificate {
  bool verdict = false;
  // Nonempty whenever verdict is false.
  std::vector<Violation> violations;
};

// The inequality description of t·(v + Z(U)) used for membership tests.
// Facet normals are the primitive normals, inside span(U), of hyperplanes
// spanned by rank(U) - 1 generators; the affine hull is cut out by the
// integer kernel of U.
class ZonotopeMembership {
 public:
  ZonotopeMembership(const ZonotopeSpec& zonotope, const Integer& t);

  MembershipCertificate Contains(const IntVector& p) const;

  struct Inequality {
    IntVector normal;
    Rational lower;  // lower <= <normal, p> <= upper
    Rational upper;
  };
  struct Equation {
    IntVector normal;
    Rational target;  // <normal, p> = target
  };
  const std::vector<Inequality>& inequalities() const { return inequalities_; }
  const std::vector<Equation>& equations() const { return equations_; }

 private:
  std::size_t dim_;
  std::vector<Equation> equations_;
  std::vector<Inequality> inequalities_;
};

MembershipCertificate ZonotopeContains(const ZonotopeSpec& zonotope,
                                       const Integer& t, const IntVector& p);

// |t·(v + Z(U)) ∩ Z^d| by exhaustive scan of the coordinate bounding box.
// Throws SizeLimitError if the box has more than max_box points.
Integer CountPoints(const ZonotopeSpec& zonotope, const Integer& t,
                    std::uint64_t max_box = kDefaultMaxBox);

enum class StructureKind {
  kTree,
  kPseudotree,
  kSignedTree,
  kSignedHalfedgeTree,
  kSignedLoopTree,
  kSignedPseudotree,
};

StructureKind ParseStructureKind(const std::string& text);
std::string StructureKindName(StructureKind kind);
// Largest n the brute-force enumeration accepts for this kind.
std::size_t MaxStructureSize(StructureKind kind);

// Number of connected structures of the given kind on vertex set [n],
// found by enumerating edge sets and classifying each.
Integer BruteForceStructures(StructureKind kind, std::size_t n);

}  // namespace coxeter_ehrhart

#endif  // COXETER_EHRHART_ORACLE_HPP_
