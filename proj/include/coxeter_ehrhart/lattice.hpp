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

// Exact linear algebra over the standard lattice Z^d.

#ifndef COXETER_EHRHART_LATTICE_HPP_
#define COXETER_EHRHART_LATTICE_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxeter_ehrhart {

using Integer = mpz_class;
using Rational = mpq_class;

// Thrown when inputs of differing ambient dimension are combined.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown when a computation would exceed a configured size ceiling.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A vector in Z^d with arbitrary-precision entries.
class IntVector {
 public:
  IntVector() = default;
  explicit IntVector(std::size_t dim) : entries_(dim, 0) {}
  explicit IntVector(std::vector<Integer> entries)
      : entries_(std::move(entries)) {}
  IntVector(std::initializer_list<long> entries);

  static IntVector Unit(std::size_t dim, std::size_t i);

  std::size_t dim() const { return entries_.size(); }
  const Integer& operator[](std::size_t i) const { return entries_[i]; }
  Integer& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<Integer>& entries() const { return entries_; }

  bool IsZero() const;
  std::string ToString() const;

  friend bool operator==(const IntVector& a, const IntVector& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator<(const IntVector& a, const IntVector& b) {
    return a.entries_ < b.entries_;
  }

 private:
  std::vector<Integer> entries_;
};

IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);
IntVector operator*(const Integer& c, const IntVector& a);

// A vector in Q^d. Entries are always kept in lowest terms with positive
// denominators.
class RatVector {
 public:
  RatVector() = default;
  explicit RatVector(std::size_t dim) : entries_(dim, 0) {}
  explicit RatVector(std::vector<Rational> entries);
  explicit RatVector(const IntVector& v);

  // Parses entries of the form "p/q" or "p".
  static RatVector Parse(std::span<const std::string> entries);

  std::size_t dim() const { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Rational>& entries() const { return entries_; }

  bool IsIntegral() const;
  // Least common multiple of the entry denominators (1 for the empty vector).
  Integer DenominatorLcm() const;
  // The representative of this vector modulo Z^d with entries in [0, 1).
  RatVector ReducedModLattice() const;
  RatVector Scaled(const Integer& t) const;
  std::string ToString() const;

  friend bool operator==(const RatVector& a, const RatVector& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<Rational> entries_;
};

Rational ParseRational(const std::string& text);
std::string RationalToString(const Rational& q);

Integer Dot(const IntVector& a, const IntVector& b);
Rational Dot(const IntVector& a, const RatVector& b);

// Dimension of the rational span. All vectors must share the same dim.
std::size_t Rank(std::span<const IntVector> vectors);

// Determinant of a square integer matrix (row-major, fraction-free Bareiss).
Integer Determinant(std::vector<std::vector<Integer>> m);

// Relative volume of the half-open parallelepiped spanned by an independent
// nonempty list: the gcd of all maximal minors of the d x |W| matrix.
// Throws std::invalid_argument on dependent or empty input.
Integer RelativeVolume(std::span<const IntVector> w);

// Basis of the saturated lattice Z^d ∩ span(W)^⊥, computed by unimodular
// column reduction. The ambient dimension must be given since W may be empty.
// Each basis vector is normalized so that its first nonzero entry is positive.
std::vector<IntVector> IntegerKernelBasis(std::span<const IntVector> w,
                                          std::size_t dim);

// χ_W(t): 1 iff the flat t·v + span(W) contains a point of Z^d.
int Chi(const RatVector& v, std::span<const IntVector> w, const Integer& t);

// Same test against a precomputed IntegerKernelBasis(w).
bool FlatMeetsLattice(const RatVector& v, std::span<const IntVector> kernel,
                      const Integer& t);

// Incremental row-echelon basis over Q, used to test independence of a
// growing list of vectors without refactoring from scratch.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  // Returns true and adds v if v is independent of the current rows.
  bool TryAdd(const IntVector& v);
  void Pop();
  std::size_t size() const { return rows_.size(); }

 private:
  struct Row {
    std::vector<Rational> entries;
    std::size_t pivot;
  };
  std::size_t dim_;
  std::vector<Row> rows_;
};

// Throws DimensionError unless every vector has dimension `dim`.
void RequireDimension(std::span<const IntVector> vectors, std::size_t dim);

}  // namespace coxeter_ehrhart

#endif  // COXETER_EHRHART_LATTICE_HPP_
