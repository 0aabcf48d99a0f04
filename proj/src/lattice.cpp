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

#include "coxeter_ehrhart/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <utility>

namespace coxeter_ehrhart {

IntVector::IntVector(std::initializer_list<long> entries) {
  entries_.reserve(entries.size());
  for (long e : entries) entries_.emplace_back(e);
}

IntVector IntVector::Unit(std::size_t dim, std::size_t i) {
  IntVector v(dim);
  v[i] = 1;
  return v;
}

bool IntVector::IsZero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Integer& e) { return e == 0; });
}

std::string IntVector::ToString() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0) out += ", ";
    out += entries_[i].get_str();
  }
  return out + ")";
}

IntVector operator+(const IntVector& a, const IntVector& b) {
  if (a.dim() != b.dim()) throw DimensionError("vector dimension mismatch");
  IntVector r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVector operator-(const IntVector& a, const IntVector& b) {
  if (a.dim() != b.dim()) throw DimensionError("vector dimension mismatch");
  IntVector r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVector operator*(const Integer& c, const IntVector& a) {
  IntVector r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = c * a[i];
  return r;
}

RatVector::RatVector(std::vector<Rational> entries)
    : entries_(std::move(entries)) {
  for (Rational& q : entries_) q.canonicalize();
}

RatVector::RatVector(const IntVector& v) {
  entries_.reserve(v.dim());
  for (const Integer& e : v.entries()) entries_.emplace_back(e);
}

RatVector RatVector::Parse(std::span<const std::string> entries) {
  std::vector<Rational> parsed;
  parsed.reserve(entries.size());
  for (const std::string& s : entries) parsed.push_back(ParseRational(s));
  return RatVector(std::move(parsed));
}

bool RatVector::IsIntegral() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Rational& q) { return q.get_den() == 1; });
}

Integer RatVector::DenominatorLcm() const {
  Integer l = 1;
  for (const Rational& q : entries_) l = lcm(l, q.get_den());
  return l;
}

RatVector RatVector::ReducedModLattice() const {
  std::vector<Rational> out;
  out.reserve(entries_.size());
  for (const Rational& q : entries_) {
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    out.emplace_back(q - fl);
  }
  return RatVector(std::move(out));
}

RatVector RatVector::Scaled(const Integer& t) const {
  std::vector<Rational> out;
  out.reserve(entries_.size());
  for (const Rational& q : entries_) out.emplace_back(q * t);
  return RatVector(std::move(out));
}

std::string RatVector::ToString() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0) out += ", ";
    out += RationalToString(entries_[i]);
  }
  return out + ")";
}

namespace {

bool IsSignedDigits(const std::string& s) {
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) return false;
  return std::all_of(s.begin() + static_cast<long>(start), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

std::string Trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

Rational ParseRational(const std::string& text) {
  const std::string s = Trim(text);
  const auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!IsSignedDigits(num) || !IsSignedDigits(den) || den[0] == '-' ||
      den[0] == '+') {
    throw std::invalid_argument("malformed rational \"" + text + "\"");
  }
  if (num[0] == '+') num.erase(0, 1);
  Integer d(den);
  if (d == 0) {
    throw std::invalid_argument("zero denominator in \"" + text + "\"");
  }
  Rational q(Integer(num), d);
  q.canonicalize();
  return q;
}

std::string RationalToString(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

void RequireDimension(std::span<const IntVector> vectors, std::size_t dim) {
  for (const IntVector& v : vectors) {
    if (v.dim() != dim) {
      throw DimensionError("expected vectors of dimension " +
                           std::to_string(dim) + ", got " +
                           std::to_string(v.dim()));
    }
  }
}

Integer Dot(const IntVector& a, const IntVector& b) {
  if (a.dim() != b.dim()) throw DimensionError("vector dimension mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

Rational Dot(const IntVector& a, const RatVector& b) {
  if (a.dim() != b.dim()) throw DimensionError("vector dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  s.canonicalize();
  return s;
}

bool EchelonBasis::TryAdd(const IntVector& v) {
  if (v.dim() != dim_) throw DimensionError("vector dimension mismatch");
  std::vector<Rational> r(v.entries().begin(), v.entries().end());
  for (const Row& row : rows_) {
    if (r[row.pivot] == 0) continue;
    Rational f = r[row.pivot] / row.entries[row.pivot];
    for (std::size_t i = row.pivot; i < dim_; ++i) {
      r[i] -= f * row.entries[i];
    }
  }
  for (std::size_t i = 0; i < dim_; ++i) {
    if (r[i] != 0) {
      rows_.push_back(Row{std::move(r), i});
      return true;
    }
  }
  return false;
}

void EchelonBasis::Pop() { rows_.pop_back(); }

std::size_t Rank(std::span<const IntVector> vectors) {
  if (vectors.empty()) return 0;
  const std::size_t dim = vectors.front().dim();
  RequireDimension(vectors, dim);
  EchelonBasis basis(dim);
  for (const IntVector& v : vectors) {
    basis.TryAdd(v);
    if (basis.size() == dim) break;
  }
  return basis.size();
}

Integer Determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

namespace {

// Calls fn on each increasing k-subset of {0, ..., n-1}.
template <typename Fn>
void ForEachCombination(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    fn(std::span<const std::size_t>(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Row Hermite normal form of an integer matrix with independent rows.
std::vector<IntVector> RowHermite(std::vector<IntVector> rows,
                                  std::size_t dim) {
  std::size_t top = 0;
  for (std::size_t col = 0; col < dim && top < rows.size(); ++col) {
    for (std::size_t r = top + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      if (rows[top][col] == 0) {
        std::swap(rows[top], rows[r]);
        continue;
      }
      Integer g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(),
                 rows[top][col].get_mpz_t(), rows[r][col].get_mpz_t());
      Integer a = rows[top][col] / g;
      Integer b = rows[r][col] / g;
      IntVector new_top = x * rows[top] + y * rows[r];
      IntVector new_r = a * rows[r] - b * rows[top];
      rows[top] = std::move(new_top);
      rows[r] = std::move(new_r);
    }
    if (rows[top][col] == 0) continue;
    if (rows[top][col] < 0) rows[top] = Integer(-1) * rows[top];
    for (std::size_t r = 0; r < top; ++r) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(),
                 rows[top][col].get_mpz_t());
      if (q != 0) rows[r] = rows[r] - q * rows[top];
    }
    ++top;
  }
  return rows;
}

}  // namespace

Integer RelativeVolume(std::span<const IntVector> w) {
  if (w.empty()) {
    throw std::invalid_argument("relative volume of an empty set is undefined");
  }
  const std::size_t d = w.front().dim();
  RequireDimension(w, d);
  const std::size_t k = w.size();
  if (Rank(w) != k) {
    throw std::invalid_argument("relative volume requires independent vectors");
  }
  Integer g = 0;
  ForEachCombination(d, k, [&](std::span<const std::size_t> rows) {
    std::vector<std::vector<Integer>> m(k, std::vector<Integer>(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) m[i][j] = w[j][rows[i]];
    }
    g = gcd(g, Determinant(std::move(m)));
  });
  return abs(g);
}

std::vector<IntVector> IntegerKernelBasis(std::span<const IntVector> w,
                                          std::size_t dim) {
  RequireDimension(w, dim);
  // Column operations on A = W^T (rows are the vectors of w), mirrored on U.
  // Starting from U = I, A*U reaches column echelon form; the trailing
  // columns of U span the integer kernel and, U being unimodular, they
  // generate all of it.
  std::vector<IntVector> a_cols(dim, IntVector(w.size()));
  std::vector<IntVector> u_cols;
  u_cols.reserve(dim);
  for (std::size_t c = 0; c < dim; ++c) {
    for (std::size_t r = 0; r < w.size(); ++r) a_cols[c][r] = w[r][c];
    u_cols.push_back(IntVector::Unit(dim, c));
  }
  std::size_t pivot = 0;
  for (std::size_t r = 0; r < w.size() && pivot < dim; ++r) {
    for (std::size_t c = pivot + 1; c < dim; ++c) {
      const Integer b = a_cols[c][r];
      if (b == 0) continue;
      const Integer a = a_cols[pivot][r];
      if (a == 0) {
        std::swap(a_cols[pivot], a_cols[c]);
        std::swap(u_cols[pivot], u_cols[c]);
        continue;
      }
      Integer g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(),
                 b.get_mpz_t());
      const Integer a_g = a / g;
      const Integer b_g = b / g;
      IntVector ap = x * a_cols[pivot] + y * a_cols[c];
      IntVector ac = a_g * a_cols[c] - b_g * a_cols[pivot];
      IntVector up = x * u_cols[pivot] + y * u_cols[c];
      IntVector uc = a_g * u_cols[c] - b_g * u_cols[pivot];
      a_cols[pivot] = std::move(ap);
      a_cols[c] = std::move(ac);
      u_cols[pivot] = std::move(up);
      u_cols[c] = std::move(uc);
    }
    if (a_cols[pivot][r] != 0) ++pivot;
  }
  std::vector<IntVector> kernel(u_cols.begin() + static_cast<long>(pivot),
                                u_cols.end());
  return RowHermite(std::move(kernel), dim);
}

bool FlatMeetsLattice(const RatVector& v, std::span<const IntVector> kernel,
                      const Integer& t) {
  for (const IntVector& f : kernel) {
    Rational pairing = Dot(f, v) * t;
    pairing.canonicalize();
    if (pairing.get_den() != 1) return false;
  }
  return true;
}

int Chi(const RatVector& v, std::span<const IntVector> w, const Integer& t) {
  if (t <= 0) throw std::invalid_argument("chi requires a positive dilation");
  const auto kernel = IntegerKernelBasis(w, v.dim());
  return FlatMeetsLattice(v, kernel, t) ? 1 : 0;
}

}  // namespace coxeter_ehrhart
