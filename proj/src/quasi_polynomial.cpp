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

#include "coxeter_ehrhart/quasi_polynomial.hpp"

#include <stdexcept>

namespace coxeter_ehrhart {

void TrimPolynomial(Polynomial& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Polynomial MakePolynomial(std::initializer_list<long> coefficients) {
  Polynomial p;
  for (long c : coefficients) p.emplace_back(c);
  TrimPolynomial(p);
  return p;
}

Rational EvaluatePolynomial(const Polynomial& p, const Rational& t) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
  return acc;
}

namespace {

std::string Superscript(std::size_t k) {
  static const char* const kDigits[] = {"⁰", "¹", "²", "³", "⁴",
                                        "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string digits = std::to_string(k);
  std::string out;
  for (char c : digits) out += kDigits[c - '0'];
  return out;
}

}  // namespace

std::string FormatPolynomial(const Polynomial& p, bool superscripts,
                             bool spaced) {
  std::string out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] == 0) continue;
    Rational c = p[k];
    const bool negative = c < 0;
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += spaced ? (negative ? " - " : " + ") : (negative ? "-" : "+");
    }
    const bool unit = c == 1 && k > 0;
    if (!unit) {
      out += c.get_den() == 1 ? c.get_num().get_str()
                              : "(" + RationalToString(c) + ")";
    }
    if (k >= 1) out += "t";
    if (k >= 2) out += superscripts ? Superscript(k) : "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

QuasiPolynomial::QuasiPolynomial(Polynomial p) : constituents_{std::move(p)} {
  TrimPolynomial(constituents_.front());
}

QuasiPolynomial::QuasiPolynomial(std::vector<Polynomial> constituents)
    : constituents_(std::move(constituents)) {
  if (constituents_.empty()) {
    throw std::invalid_argument("quasipolynomial needs a positive period");
  }
  for (Polynomial& p : constituents_) TrimPolynomial(p);
}

std::size_t QuasiPolynomial::degree() const {
  std::size_t d = 0;
  for (const Polynomial& p : constituents_) {
    if (!p.empty()) d = std::max(d, p.size() - 1);
  }
  return d;
}

Rational QuasiPolynomial::Evaluate(const Integer& t) const {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), t.get_mpz_t(), constituents_.size());
  return EvaluatePolynomial(constituents_[r.get_ui()], Rational(t));
}

QuasiPolynomial QuasiPolynomial::Minimized() const {
  const std::size_t c = constituents_.size();
  for (std::size_t p = 1; p < c; ++p) {
    if (c % p != 0) continue;
    bool folds = true;
    for (std::size_t r = p; r < c && folds; ++r) {
      folds = constituents_[r] == constituents_[r % p];
    }
    if (folds) {
      return QuasiPolynomial(std::vector<Polynomial>(
          constituents_.begin(), constituents_.begin() + static_cast<long>(p)));
    }
  }
  return *this;
}

Polynomial Interpolate(const std::vector<Rational>& xs,
                       const std::vector<Rational>& ys) {
  if (xs.size() != ys.size()) {
    throw std::invalid_argument("interpolation needs matching point lists");
  }
  const std::size_t m = xs.size();
  Polynomial result(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    // Basis polynomial prod_{j != i} (t - x_j) / (x_i - x_j).
    Polynomial basis{Rational(1)};
    Rational denom = 1;
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      if (xs[i] == xs[j]) {
        throw std::invalid_argument("interpolation nodes must be distinct");
      }
      Polynomial next(basis.size() + 1, 0);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * xs[j];
      }
      basis = std::move(next);
      denom *= xs[i] - xs[j];
    }
    const Rational scale = ys[i] / denom;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      result[k] += basis[k] * scale;
    }
  }
  for (Rational& c : result) c.canonicalize();
  TrimPolynomial(result);
  return result;
}

}  // namespace coxeter_ehrhart
