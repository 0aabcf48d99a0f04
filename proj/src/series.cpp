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

#include "coxeter_ehrhart/series.hpp"

#include <stdexcept>

namespace coxeter_ehrhart {

namespace {

void RequireSameOrder(const RatSeries& f, const RatSeries& g) {
  if (f.order() != g.order()) {
    throw std::invalid_argument("series orders differ");
  }
}

Integer Factorial(std::size_t k) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return f;
}

}  // namespace

RatSeries::RatSeries(std::size_t order, std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1, 0);
  for (Rational& c : coeffs_) c.canonicalize();
}

RatSeries RatSeries::Constant(std::size_t order, const Rational& c) {
  RatSeries f(order);
  f[0] = c;
  return f;
}

RatSeries RatSeries::X(std::size_t order) {
  RatSeries f(order);
  if (order >= 1) f[1] = 1;
  return f;
}

Rational RatSeries::EgfCoefficient(std::size_t k) const {
  return coeffs_[k] * Factorial(k);
}

RatSeries& RatSeries::operator+=(const RatSeries& g) {
  RequireSameOrder(*this, g);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += g[k];
  return *this;
}

RatSeries& RatSeries::operator-=(const RatSeries& g) {
  RequireSameOrder(*this, g);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= g[k];
  return *this;
}

RatSeries& RatSeries::operator*=(const Rational& c) {
  for (Rational& a : coeffs_) a *= c;
  return *this;
}

RatSeries operator*(const RatSeries& f, const RatSeries& g) {
  RequireSameOrder(f, g);
  RatSeries h(f.order());
  for (std::size_t i = 0; i <= f.order(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; i + j <= f.order(); ++j) h[i + j] += f[i] * g[j];
  }
  return h;
}

RatSeries ScaleArgument(const RatSeries& f, const Rational& c) {
  RatSeries h(f.order());
  Rational power = 1;
  for (std::size_t k = 0; k <= f.order(); ++k) {
    h[k] = f[k] * power;
    power *= c;
  }
  return h;
}

RatSeries Derivative(const RatSeries& f) {
  RatSeries h(f.order());
  for (std::size_t k = 1; k <= f.order(); ++k) {
    h[k - 1] = f[k] * static_cast<unsigned long>(k);
  }
  return h;
}

RatSeries Integral(const RatSeries& f) {
  RatSeries h(f.order());
  for (std::size_t k = 0; k < f.order(); ++k) {
    h[k + 1] = f[k] / static_cast<unsigned long>(k + 1);
  }
  return h;
}

RatSeries Inverse(const RatSeries& f) {
  if (f[0] == 0) throw std::invalid_argument("inverse needs f(0) != 0");
  RatSeries g(f.order());
  g[0] = 1 / f[0];
  for (std::size_t n = 1; n <= f.order(); ++n) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= n; ++k) acc += f[k] * g[n - k];
    g[n] = -acc * g[0];
  }
  return g;
}

RatSeries Exp(const RatSeries& f) {
  if (f[0] != 0) throw std::invalid_argument("exp needs f(0) = 0");
  // g' = f' g, i.e. n g_n = Σ_{k=1}^{n} k f_k g_{n-k}.
  RatSeries g(f.order());
  g[0] = 1;
  for (std::size_t n = 1; n <= f.order(); ++n) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      if (f[k] != 0) acc += f[k] * g[n - k] * static_cast<unsigned long>(k);
    }
    g[n] = acc / static_cast<unsigned long>(n);
  }
  return g;
}

RatSeries Log1p(const RatSeries& u) {
  if (u[0] != 0) throw std::invalid_argument("log1p needs u(0) = 0");
  RatSeries one_plus_u = u;
  one_plus_u[0] = 1;
  return Integral(Derivative(u) * Inverse(one_plus_u));
}

RatSeries Rpow1p(const RatSeries& u, const Rational& e) {
  if (u[0] != 0) throw std::invalid_argument("rpow1p needs u(0) = 0");
  return Exp(e * Log1p(u));
}

}  // namespace coxeter_ehrhart
