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


#include <algorithm>
#include <random>

#include "coxeter_ehrhart/lattice.hpp"
#include "coxeter_ehrhart/roots.hpp"
#include "coxeter_ehrhart/signed_graph.hpp"
#include "doctest.h"

namespace coxeter_ehrhart {
namespace {

constexpr RootFamily kFamilies[] = {RootFamily::kA, RootFamily::kB,
                                    RootFamily::kC, RootFamily::kD};

std::vector<IntVector> Subset(const std::vector<IntVector>& all,
                              std::uint64_t mask) {
  std::vector<IntVector> out;
  for (std::size_t k = 0; k < all.size(); ++k) {
    if (mask >> k & 1) out.push_back(all[k]);
  }
  return out;
}

std::vector<IntVector> Sorted(std::vector<IntVector> v) {
  std::sort(v.begin(), v.end());
  return v;
}

TEST_SUITE("roots") {

TEST_CASE("positive root examples") {
  CHECK(PositiveRoots(RootFamily::kA, 3).roots ==
        std::vector<IntVector>{{1, -1, 0}, {1, 0, -1}, {0, 1, -1}});
  CHECK(PositiveRoots(RootFamily::kB, 2).roots ==
        std::vector<IntVector>{{1, -1}, {1, 1}, {1, 0}, {0, 1}});
  CHECK(PositiveRoots(RootFamily::kD, 2).roots ==
        std::vector<IntVector>{{1, -1}, {1, 1}});
  CHECK(PositiveRoots(RootFamily::kC, 1).roots ==
        std::vector<IntVector>{{2}});
  CHECK(PositiveRoots(RootFamily::kA, 1).roots.empty());
  CHECK(PositiveRoots(RootFamily::kD, 1).roots.empty());
  CHECK_THROWS_AS(PositiveRoots(RootFamily::kB, 0), std::invalid_argument);
}

TEST_CASE("standard shift examples") {
  CHECK(StandardShift(RootFamily::kC, 3) == RatVector(3));
  const RatVector half2 =
      RatVector::Parse(std::vector<std::string>{"1/2", "1/2"});
  CHECK(StandardShift(RootFamily::kB, 2) == half2);
  const RatVector half4 = RatVector::Parse(
      std::vector<std::string>{"1/2", "1/2", "1/2", "1/2"});
  CHECK(StandardShift(RootFamily::kA, 4) == half4);
  CHECK(PositiveRoots(RootFamily::kB, 2).shift == half2);
}

TEST_CASE("integrality") {
  CHECK(IsIntegral(RootFamily::kA, 3));
  CHECK_FALSE(IsIntegral(RootFamily::kB, 1));
  CHECK(IsIntegral(RootFamily::kD, 4));
  for (std::size_t n = 1; n <= 8; ++n) {
    CHECK(IsIntegral(RootFamily::kA, n) == (n % 2 == 1));
    CHECK_FALSE(IsIntegral(RootFamily::kB, n));
    CHECK(IsIntegral(RootFamily::kC, n));
    CHECK(IsIntegral(RootFamily::kD, n));
  }
}

TEST_CASE("root counts, entries and centering") {
  for (RootFamily f : kFamilies) {
    for (std::size_t n = 1; n <= 8; ++n) {
      const PositiveRootSet set = PositiveRoots(f, n);
      std::size_t expected = 0;
      switch (f) {
        case RootFamily::kA:
          expected = n * (n - 1) / 2;
          break;
        case RootFamily::kB:
        case RootFamily::kC:
          expected = n * n;
          break;
        case RootFamily::kD:
          expected = n * (n - 1);
          break;
      }
      CHECK(set.roots.size() == expected);
      CHECK(ExpectedRootCount(f, n) == expected);
      std::vector<Rational> half_sum(n, 0);
      for (const IntVector& r : set.roots) {
        CHECK(r.dim() == n);
        for (std::size_t i = 0; i < n; ++i) {
          CHECK(r[i] >= -1);
          CHECK(r[i] <= 2);
          half_sum[i] += Rational(r[i]) / 2;
        }
      }
      const RatVector center = CenteringShift(f, n);
      for (std::size_t i = 0; i < n; ++i) {
        // -rho + (1/2) sum of positive roots vanishes.
        CHECK(center[i] + half_sum[i] == 0);
      }
      CHECK(StandardShift(f, n) == center.ReducedModLattice());
      CHECK(Rank(set.roots) == RootSystemRank(f, n));
    }
  }
}

TEST_CASE("labels") {
  CHECK(RankLabel(RootFamily::kA, 4) == "A_3");
  CHECK(CoordinateLabel(RootFamily::kA, 4) == "A_4");
  CHECK(RankLabel(RootFamily::kB, 3) == "B_3");
  CHECK(ParseFamily("c") == RootFamily::kC);
  CHECK_THROWS_AS(ParseFamily("E"), std::invalid_argument);
  CHECK_THROWS_AS(ParseFamily(""), std::invalid_argument);
}

}  // TEST_SUITE

TEST_SUITE("signed_graph") {

TEST_CASE("dictionary examples") {
  const SignedGraph g1 =
      GraphFromRoots(std::vector<IntVector>{{1, -1}}, 2);
  CHECK(g1.edges() == std::set<SignedEdge>{SignedEdge::Positive(0, 1)});
  const SignedGraph g2 =
      GraphFromRoots(std::vector<IntVector>{{0, 0, 2}}, 3);
  CHECK(g2.edges() == std::set<SignedEdge>{SignedEdge::Loop(2)});
  const SignedGraph g3 = GraphFromRoots(std::vector<IntVector>{{0, 1}}, 2);
  CHECK(g3.edges() == std::set<SignedEdge>{SignedEdge::Halfedge(1)});
  CHECK(EdgeFromRoot(IntVector{0, 1, 1}) == SignedEdge::Negative(1, 2));
  CHECK(SignedEdge::Positive(0, 1).ToString() == "+12");
  CHECK(SignedEdge::Halfedge(1).ToString() == "h2");
  CHECK(SignedEdge::Loop(2).ToString() == "l3");
  CHECK(SignedEdge::Positive(0, 11).ToString() == "+1,12");
  CHECK_THROWS_AS(EdgeFromRoot(IntVector{1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(EdgeFromRoot(IntVector{0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(SignedEdge::Positive(1, 1), std::invalid_argument);
}

TEST_CASE("graph construction guards") {
  SignedGraph g(2);
  g.Add(SignedEdge::Positive(0, 1));
  CHECK_THROWS_AS(g.Add(SignedEdge::Positive(0, 1)), std::invalid_argument);
  CHECK_THROWS_AS(g.Add(SignedEdge::Halfedge(2)), std::invalid_argument);
  g.Add(SignedEdge::Negative(0, 1));
  CHECK(g.HasNegativeEdges());
  CHECK_FALSE(g.HasHalfedges());
  CHECK_FALSE(g.HasLoops());
}

TEST_CASE("classify examples") {
  SignedGraph tree(2);
  tree.Add(SignedEdge::Positive(0, 1));
  auto s = Classify(tree);
  REQUIRE(s.has_value());
  CHECK(s->tc == 1);
  CHECK(s->pc + s->hc + s->lc == 0);

  SignedGraph digon(2);
  digon.Add(SignedEdge::Positive(0, 1));
  digon.Add(SignedEdge::Negative(0, 1));
  s = Classify(digon);
  REQUIRE(s.has_value());
  CHECK(s->pc == 1);
  CHECK(s->tc == 0);

  SignedGraph triangle(3);
  triangle.Add(SignedEdge::Positive(0, 1));
  triangle.Add(SignedEdge::Positive(1, 2));
  triangle.Add(SignedEdge::Positive(0, 2));
  CHECK_FALSE(Classify(triangle).has_value());

  SignedGraph two_halfedges(1);
  two_halfedges.Add(SignedEdge::Halfedge(0));
  two_halfedges.Add(SignedEdge::Loop(0));
  CHECK_FALSE(Classify(two_halfedges).has_value());
}

TEST_CASE("even tree components") {
  SignedGraph g2(2);
  g2.Add(SignedEdge::Positive(0, 1));
  CHECK(AllTreeComponentsEven(g2));
  SignedGraph g3(3);
  g3.Add(SignedEdge::Positive(0, 1));
  CHECK_FALSE(AllTreeComponentsEven(g3));
  SignedGraph h(3);
  h.Add(SignedEdge::Halfedge(0));
  h.Add(SignedEdge::Positive(0, 1));
  h.Add(SignedEdge::Positive(0, 2));
  CHECK(AllTreeComponentsEven(h));
  SignedGraph triangle(3);
  triangle.Add(SignedEdge::Positive(0, 1));
  triangle.Add(SignedEdge::Positive(1, 2));
  triangle.Add(SignedEdge::Positive(0, 2));
  CHECK_THROWS(AllTreeComponentsEven(triangle));
}

TEST_CASE("round trip over root subsets") {
  std::mt19937_64 rng(3);
  for (RootFamily f : kFamilies) {
    for (std::size_t n = 1; n <= 5; ++n) {
      const auto roots = PositiveRoots(f, n).roots;
      const bool exhaustive = roots.size() <= 12;
      const std::uint64_t trials =
          exhaustive ? std::uint64_t{1} << roots.size() : 3000;
      for (std::uint64_t k = 0; k < trials; ++k) {
        const std::uint64_t mask =
            exhaustive ? k : rng() & ((std::uint64_t{1} << roots.size()) - 1);
        const auto s = Subset(roots, mask);
        CHECK(Sorted(RootsFromGraph(GraphFromRoots(s, n))) == Sorted(s));
      }
    }
  }
}

// Independence of a root subset matches the pseudoforest condition, and each
// forest has n - tc edges and relative volume 2^(pc+lc).
void CheckForestEquivalence(RootFamily f, std::size_t n, std::uint64_t trials,
                            std::mt19937_64* rng) {
  const auto roots = PositiveRoots(f, n).roots;
  const std::uint64_t total = std::uint64_t{1} << roots.size();
  const std::uint64_t count = rng == nullptr ? total : trials;
  std::size_t forests = 0;
  for (std::uint64_t k = 0; k < count; ++k) {
    const std::uint64_t mask = rng == nullptr ? k : (*rng)() % total;
    const auto s = Subset(roots, mask);
    const SignedGraph g = GraphFromRoots(s, n);
    const auto stats = Classify(g);
    const bool independent = Rank(s) == s.size();
    CHECK(independent == stats.has_value());
    if (f == RootFamily::kA) CHECK_FALSE(g.HasNegativeEdges());
    if (f != RootFamily::kB) CHECK_FALSE(g.HasHalfedges());
    if (f != RootFamily::kC) CHECK_FALSE(g.HasLoops());
    if (!stats) continue;
    ++forests;
    CHECK(s.size() == n - stats->tc);
    CHECK(stats->edge_count == s.size());
    const Integer expected_volume = Integer(1) << (stats->pc + stats->lc);
    if (!s.empty()) CHECK(RelativeVolume(s) == expected_volume);
  }
  CHECK(forests > 0);
}

TEST_CASE("independence is the forest condition, exhaustively") {
  CheckForestEquivalence(RootFamily::kA, 4, 0, nullptr);
  CheckForestEquivalence(RootFamily::kB, 3, 0, nullptr);
  CheckForestEquivalence(RootFamily::kC, 3, 0, nullptr);
  CheckForestEquivalence(RootFamily::kD, 4, 0, nullptr);
  for (RootFamily f : kFamilies) {
    for (std::size_t n = 1; n <= 3; ++n) CheckForestEquivalence(f, n, 0, nullptr);
  }
}

TEST_CASE("independence is the forest condition, sampled") {
  std::mt19937_64 rng(5);
  CheckForestEquivalence(RootFamily::kB, 4, 20000, &rng);
  CheckForestEquivalence(RootFamily::kC, 4, 20000, &rng);
}

// For the non-integral standard shifts, chi at odd t is the even-tree
// predicate, and switching a vertex preserves both sides.
TEST_CASE("odd dilation parity rule") {
  const std::pair<RootFamily, std::size_t> cases[] = {
      {RootFamily::kA, 2}, {RootFamily::kA, 4}, {RootFamily::kB, 1},
      {RootFamily::kB, 2}, {RootFamily::kB, 3}, {RootFamily::kB, 4}};
  for (const auto& [f, n] : cases) {
    const auto set = PositiveRoots(f, n);
    const std::uint64_t total = std::uint64_t{1} << set.roots.size();
    std::size_t checked = 0;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      const auto s = Subset(set.roots, mask);
      if (Rank(s) != s.size()) continue;
      const SignedGraph g = GraphFromRoots(s, n);
      const bool even = AllTreeComponentsEven(g);
      for (long t : {1L, 3L}) {
        CHECK((Chi(set.shift, s, t) == 1) == even);
      }
      CHECK(Chi(set.shift, s, 2) == 1);
      if (f == RootFamily::kB) {
        for (std::size_t v = 0; v < n; ++v) {
          const SignedGraph sw = SwitchVertex(g, v);
          const auto sw_roots = RootsFromGraph(sw);
          CHECK(Classify(sw) == Classify(g));
          CHECK(AllTreeComponentsEven(sw) == even);
          CHECK(Chi(set.shift, sw_roots, 1) == Chi(set.shift, s, 1));
        }
      }
      ++checked;
    }
    CHECK(checked > 0);
  }
}

TEST_CASE("components") {
  SignedGraph g(5);
  g.Add(SignedEdge::Positive(0, 1));
  g.Add(SignedEdge::Negative(0, 1));
  g.Add(SignedEdge::Halfedge(2));
  g.Add(SignedEdge::Positive(2, 3));
  const auto comps = Components(g);
  REQUIRE(comps.size() == 3);
  const auto stats = Classify(g);
  REQUIRE(stats.has_value());
  CHECK(stats->pc == 1);
  CHECK(stats->hc == 1);
  CHECK(stats->tc == 1);
  CHECK(stats->edge_count == 4);
  CHECK_FALSE(stats->all_trees_even);
}

}  // TEST_SUITE

}  // namespace
}  // namespace coxeter_ehrhart
