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

#ifndef COXETER_EHRHART_QUASI_POLYNOMIAL_HPP_
#define COXETER_EHRHART_QUASI_POLYNOMIAL_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "coxeter_ehrhart/lattice.hpp"

namespace coxeter_ehrhart {

// Ascending coefficients c_0, c_1, ... with no trailing zeros. The zero
// polynomial is the empty vector.
using Polynomial = std::vector<Rational>;

void TrimPolynomial(Polynomial& p);
Polynomial MakePolynomial(std::initializer_list<long> coefficients);
Rational EvaluatePolynomial(const Polynomial& p, const Rational& t);

// Renders ascending powers, e.g. "1 + 9t + 39t² + 87t³". With
// `superscripts` false powers are written t^2; `spaced` false drops the
// spaces around + and -.
std::string FormatPolynomial(const Polynomial& p, bool superscripts = true,
                             bool spaced = true);

// A function t -> Q on positive integers that agrees with a polynomial on
// each residue class of t modulo the period.
class QuasiPolynomial {
 public:
  QuasiPolynomial() : constituents_(1) {}
  explicit QuasiPolynomial(Polynomial p);
  // constituents[r] is valid for t ≡ r (mod constituents.size()).
  explicit QuasiPolynomial(std::vector<Polynomial> constituents);

  std::size_t period() const { return constituents_.size(); }
  const std::vector<Polynomial>& constituents() const { return constituents_; }
  const Polynomial& Constituent(std::size_t residue) const {
    return constituents_[residue % constituents_.size()];
  }
  std::size_t degree() const;

  Rational Evaluate(const Integer& t) const;

  // Folds the constituents down to the smallest period that reproduces them.
  QuasiPolynomial Minimized() const;

  friend bool operator==(const QuasiPolynomial&,
                         const QuasiPolynomial&) = default;

 private:
  std::vector<Polynomial> constituents_;
};

// Lagrange interpolation through (x_i, y_i) with distinct x_i.
Polynomial Interpolate(const std::vector<Rational>& xs,
                       const std::vector<Rational>& ys);

}  // namespace coxeter_ehrhart

#endif  // COXETER_EHRHART_QUASI_POLYNOMIAL_HPP_
