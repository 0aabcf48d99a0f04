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

// Truncated power series with exact rational coefficients.

#ifndef COXETER_EHRHART_SERIES_HPP_
#define COXETER_EHRHART_SERIES_HPP_

#include <cstddef>
#include <vector>

#include "coxeter_ehrhart/lattice.hpp"

namespace coxeter_ehrhart {

// Σ_{k=0}^{order} a_k x^k, all arithmetic taken modulo x^{order+1}.
// Binary operations require equal orders.
class RatSeries {
 public:
  explicit RatSeries(std::size_t order) : coeffs_(order + 1, 0) {}
  RatSeries(std::size_t order, std::vector<Rational> coeffs);

  static RatSeries Constant(std::size_t order, const Rational& c);
  static RatSeries X(std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t k) const { return coeffs_[k]; }
  Rational& operator[](std::size_t k) { return coeffs_[k]; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  // k! · [x^k], the count encoded by an exponential generating function.
  Rational EgfCoefficient(std::size_t k) const;

  RatSeries& operator+=(const RatSeries& g);
  RatSeries& operator-=(const RatSeries& g);
  RatSeries& operator*=(const Rational& c);

  friend RatSeries operator+(RatSeries f, const RatSeries& g) {
    return f += g;
  }
  friend RatSeries operator-(RatSeries f, const RatSeries& g) {
    return f -= g;
  }
  friend RatSeries operator-(RatSeries f) { return f *= Rational(-1); }
  friend RatSeries operator*(const Rational& c, RatSeries f) { return f *= c; }
  friend RatSeries operator*(const RatSeries& f, const RatSeries& g);

  friend bool operator==(const RatSeries&, const RatSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

// f(c·x).
RatSeries ScaleArgument(const RatSeries& f, const Rational& c);
// Formal derivative and antiderivative, truncated to the same order.
RatSeries Derivative(const RatSeries& f);
RatSeries Integral(const RatSeries& f);
// 1/f; requires f(0) != 0.
RatSeries Inverse(const RatSeries& f);
// exp(f); requires f(0) = 0.
RatSeries Exp(const RatSeries& f);
// log(1 + u); requires u(0) = 0.
RatSeries Log1p(const RatSeries& u);
// (1 + u)^e = exp(e·log(1 + u)); requires u(0) = 0.
RatSeries Rpow1p(const RatSeries& u, const Rational& e);

}  // namespace coxeter_ehrhart

#endif  // COXETER_EHRHART_SERIES_HPP_
