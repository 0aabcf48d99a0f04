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

// Positive roots of the classical root systems.
//
// Everything here is indexed by the ambient dimension n (the number of
// coordinates). Family A on n coordinates is the rank n-1 system A_{n-1};
// B, C and D on n coordinates have rank n. Tables of Ehrhart polynomials in
// the literature label type-A rows by the coordinate count, so the row
// "A_4" is the rank-3 polytope in R^4.

#ifndef COXETER_EHRHART_ROOTS_HPP_
#define COXETER_EHRHART_ROOTS_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "coxeter_ehrhart/lattice.hpp"

namespace coxeter_ehrhart {

enum class RootFamily { kA, kB, kC, kD };

char FamilyLetter(RootFamily family);
// Accepts "A".."D" (case-insensitive).
RootFamily ParseFamily(const std::string& text);

// Root system label by rank, e.g. "A_3" for family A on 4 coordinates.
std::string RankLabel(RootFamily family, std::size_t n);
// Row label by coordinate count, e.g. "A_4" for family A on 4 coordinates.
std::string CoordinateLabel(RootFamily family, std::size_t n);

struct PositiveRootSet {
  RootFamily family;
  std::size_t n;
  // Order: all e_i - e_j, then e_i + e_j, then e_i (B) or 2e_i (C); pairs in
  // lexicographic (i, j) order with i < j.
  std::vector<IntVector> roots;
  // -ρ reduced modulo Z^n: either zero or (1/2, ..., 1/2).
  RatVector shift;
};

PositiveRootSet PositiveRoots(RootFamily family, std::size_t n);

// -ρ reduced modulo Z^n.
RatVector StandardShift(RootFamily family, std::size_t n);

// -ρ itself, where ρ is half the sum of the positive roots. The standard
// Coxeter permutahedron is -ρ + Σ[0, α], centered at the origin.
RatVector CenteringShift(RootFamily family, std::size_t n);

// True iff the standard Coxeter permutahedron is a lattice polytope.
bool IsIntegral(RootFamily family, std::size_t n);

// Dimension of the permutahedron (the rank of the root system).
std::size_t RootSystemRank(RootFamily family, std::size_t n);

std::size_t ExpectedRootCount(RootFamily family, std::size_t n);

}  // namespace coxeter_ehrhart

#endif  // COXETER_EHRHART_ROOTS_HPP_
