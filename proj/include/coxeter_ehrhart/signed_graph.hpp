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

// Signed graphs as a model for subsets of classical positive roots.
//
// A subset S of positive roots on n coordinates becomes a signed graph on
// vertices {0, ..., n-1}:
//   e_i - e_j  ->  positive edge ij
//   e_i + e_j  ->  negative edge ij
//   e_j        ->  halfedge at j
//   2 e_j      ->  negative loop at j
// Parallel edges of opposite sign are allowed; they form a 2-cycle with one
// negative edge, which is unbalanced.

#ifndef COXETER_EHRHART_SIGNED_GRAPH_HPP_
#define COXETER_EHRHART_SIGNED_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "coxeter_ehrhart/lattice.hpp"

namespace coxeter_ehrhart {

enum class EdgeKind { kPositive, kNegative, kHalfedge, kNegativeLoop };

struct SignedEdge {
  EdgeKind kind;
  std::size_t i;
  // Second endpoint for positive/negative edges (i < j); equal to i for
  // halfedges and loops.
  std::size_t j;

  static SignedEdge Positive(std::size_t i, std::size_t j);
  static SignedEdge Negative(std::size_t i, std::size_t j);
  static SignedEdge Halfedge(std::size_t i);
  static SignedEdge Loop(std::size_t i);

  bool IsLink() const {
    return kind == EdgeKind::kPositive || kind == EdgeKind::kNegative;
  }
  // Vertices are printed 1-based, matching the e_1, ..., e_n convention.
  std::string ToString() const;

  auto operator<=>(const SignedEdge&) const = default;
};

class SignedGraph {
 public:
  explicit SignedGraph(std::size_t n) : n_(n) {}
  SignedGraph(std::size_t n, std::span<const SignedEdge> edges);

  std::size_t vertex_count() const { return n_; }
  const std::set<SignedEdge>& edges() const { return edges_; }

  // Throws std::invalid_argument on duplicates or out-of-range vertices.
  void Add(const SignedEdge& e);

  bool HasHalfedges() const;
  bool HasLoops() const;
  bool HasNegativeEdges() const;

  friend bool operator==(const SignedGraph&, const SignedGraph&) = default;

 private:
  std::size_t n_;
  std::set<SignedEdge> edges_;
};

// Vertex count n is explicit so the empty subset still has n vertices.
SignedGraph GraphFromRoots(std::span<const IntVector> roots, std::size_t n);
// Roots in the order of the graph's edge set.
std::vector<IntVector> RootsFromGraph(const SignedGraph& g);
SignedEdge EdgeFromRoot(const IntVector& root);
IntVector RootFromEdge(const SignedEdge& e, std::size_t n);

// Shape of one connected component, before any pseudoforest judgement.
struct ComponentShape {
  std::vector<std::size_t> vertices;
  std::size_t links = 0;      // positive and negative edges
  std::size_t halfedges = 0;
  std::size_t loops = 0;
  std::size_t cycles = 0;     // cycle rank of the link subgraph
  // Meaningful when cycles == 1: the unique cycle has an odd number of
  // negative edges.
  bool cycle_unbalanced = false;
};

std::vector<ComponentShape> Components(const SignedGraph& g);

enum class ComponentType { kTree, kHalfedgeTree, kLoopTree, kPseudotree };

// nullopt when the component is not one of the four pseudoforest kinds.
std::optional<ComponentType> ClassifyComponent(const ComponentShape& c);

struct ComponentStats {
  std::size_t tc = 0;
  std::size_t hc = 0;
  std::size_t lc = 0;
  std::size_t pc = 0;
  std::size_t edge_count = 0;
  bool all_trees_even = true;

  std::size_t components() const { return tc + hc + lc + pc; }
  friend bool operator==(const ComponentStats&,
                         const ComponentStats&) = default;
};

// Component statistics, or nullopt if g is not a signed pseudoforest.
std::optional<ComponentStats> Classify(const SignedGraph& g);

// True iff every tree component has an even number of vertices. Throws
// std::invalid_argument if g is not a signed pseudoforest.
bool AllTreeComponentsEven(const SignedGraph& g);

// Flips the sign of every link with exactly one endpoint at v. On roots this
// negates coordinate v (up to the sign of each root), so spans are mapped
// onto spans of the reflected subset.
SignedGraph SwitchVertex(const SignedGraph& g, std::size_t v);

}  // namespace coxeter_ehrhart

#endif  // COXETER_EHRHART_SIGNED_GRAPH_HPP_
