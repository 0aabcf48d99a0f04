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

#include "coxeter_ehrhart/roots.hpp"

#include <stdexcept>

namespace coxeter_ehrhart {

char FamilyLetter(RootFamily family) {
  switch (family) {
    case RootFamily::kA:
      return 'A';
    case RootFamily::kB:
      return 'B';
    case RootFamily::kC:
      return 'C';
    case RootFamily::kD:
      return 'D';
  }
  return '?';
}

RootFamily ParseFamily(const std::string& text) {
  if (text.size() == 1) {
    switch (text[0]) {
      case 'A':
      case 'a':
        return RootFamily::kA;
      case 'B':
      case 'b':
        return RootFamily::kB;
      case 'C':
      case 'c':
        return RootFamily::kC;
      case 'D':
      case 'd':
        return RootFamily::kD;
      default:
        break;
    }
  }
  throw std::invalid_argument("unknown root family \"" + text +
                              "\" (expected A, B, C or D)");
}

std::string RankLabel(RootFamily family, std::size_t n) {
  return std::string(1, FamilyLetter(family)) + "_" +
         std::to_string(family == RootFamily::kA ? n - 1 : n);
}

std::string CoordinateLabel(RootFamily family, std::size_t n) {
  return std::string(1, FamilyLetter(family)) + "_" + std::to_string(n);
}

std::size_t RootSystemRank(RootFamily family, std::size_t n) {
  if (family == RootFamily::kA) return n - 1;
  if (family == RootFamily::kD && n == 1) return 0;
  return n;
}

std::size_t ExpectedRootCount(RootFamily family, std::size_t n) {
  switch (family) {
    case RootFamily::kA:
      return n * (n - 1) / 2;
    case RootFamily::kB:
    case RootFamily::kC:
      return n * n;
    case RootFamily::kD:
      return n * (n - 1);
  }
  return 0;
}

PositiveRootSet PositiveRoots(RootFamily family, std::size_t n) {
  if (n == 0) throw std::invalid_argument("root system needs n >= 1");
  PositiveRootSet set{family, n, {}, StandardShift(family, n)};
  set.roots.reserve(ExpectedRootCount(family, n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      IntVector r(n);
      r[i] = 1;
      r[j] = -1;
      set.roots.push_back(std::move(r));
    }
  }
  if (family == RootFamily::kA) return set;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      IntVector r(n);
      r[i] = 1;
      r[j] = 1;
      set.roots.push_back(std::move(r));
    }
  }
  if (family == RootFamily::kB || family == RootFamily::kC) {
    const long scale = family == RootFamily::kB ? 1 : 2;
    for (std::size_t i = 0; i < n; ++i) {
      IntVector r(n);
      r[i] = scale;
      set.roots.push_back(std::move(r));
    }
  }
  return set;
}

RatVector CenteringShift(RootFamily family, std::size_t n) {
  if (n == 0) throw std::invalid_argument("root system needs n >= 1");
  // ρ_i for each family, from summing the positive roots coordinatewise:
  //   A: (n-1)/2 - i,  B: n - i - 1/2,  C: n - i,  D: n - i - 1.
  std::vector<Rational> shift(n);
  for (std::size_t i = 0; i < n; ++i) {
    const long k = static_cast<long>(i);
    const long m = static_cast<long>(n);
    Rational rho;
    switch (family) {
      case RootFamily::kA:
        rho = Rational(m - 1 - 2 * k, 2);
        break;
      case RootFamily::kB:
        rho = Rational(2 * (m - k) - 1, 2);
        break;
      case RootFamily::kC:
        rho = Rational(m - k);
        break;
      case RootFamily::kD:
        rho = Rational(m - k - 1);
        break;
    }
    shift[i] = -rho;
  }
  return RatVector(std::move(shift));
}

RatVector StandardShift(RootFamily family, std::size_t n) {
  return CenteringShift(family, n).ReducedModLattice();
}

bool IsIntegral(RootFamily family, std::size_t n) {
  return StandardShift(family, n).IsIntegral();
}

}  // namespace coxeter_ehrhart
