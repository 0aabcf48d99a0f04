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

#include "coxeter_ehrhart/signed_graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace coxeter_ehrhart {

SignedEdge SignedEdge::Positive(std::size_t i, std::size_t j) {
  if (i == j) throw std::invalid_argument("positive edge needs i != j");
  return {EdgeKind::kPositive, std::min(i, j), std::max(i, j)};
}

SignedEdge SignedEdge::Negative(std::size_t i, std::size_t j) {
  if (i == j) throw std::invalid_argument("negative edge needs i != j");
  return {EdgeKind::kNegative, std::min(i, j), std::max(i, j)};
}

SignedEdge SignedEdge::Halfedge(std::size_t i) {
  return {EdgeKind::kHalfedge, i, i};
}

SignedEdge SignedEdge::Loop(std::size_t i) {
  return {EdgeKind::kNegativeLoop, i, i};
}

std::string SignedEdge::ToString() const {
  const std::string a = std::to_string(i + 1);
  // Two-digit labels get a separator so "+1,12" and "+11,2" stay distinct.
  const std::string b = (i >= 9 || j >= 9 ? "," : "") + std::to_string(j + 1);
  switch (kind) {
    case EdgeKind::kPositive:
      return "+" + a + b;
    case EdgeKind::kNegative:
      return "-" + a + b;
    case EdgeKind::kHalfedge:
      return "h" + a;
    case EdgeKind::kNegativeLoop:
      return "l" + a;
  }
  return "?";
}

SignedGraph::SignedGraph(std::size_t n, std::span<const SignedEdge> edges)
    : n_(n) {
  for (const SignedEdge& e : edges) Add(e);
}

void SignedGraph::Add(const SignedEdge& e) {
  if (e.i >= n_ || e.j >= n_) {
    throw std::invalid_argument("edge " + e.ToString() +
                                " out of range for " + std::to_string(n_) +
                                " vertices");
  }
  if (e.IsLink() && e.i >= e.j) {
    throw std::invalid_argument("link endpoints must satisfy i < j");
  }
  if (!edges_.insert(e).second) {
    throw std::invalid_argument("duplicate edge " + e.ToString());
  }
}

bool SignedGraph::HasHalfedges() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const SignedEdge& e) {
    return e.kind == EdgeKind::kHalfedge;
  });
}

bool SignedGraph::HasLoops() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const SignedEdge& e) {
    return e.kind == EdgeKind::kNegativeLoop;
  });
}

bool SignedGraph::HasNegativeEdges() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const SignedEdge& e) {
    return e.kind == EdgeKind::kNegative;
  });
}

SignedEdge EdgeFromRoot(const IntVector& root) {
  std::vector<std::size_t> support;
  for (std::size_t k = 0; k < root.dim(); ++k) {
    if (root[k] != 0) support.push_back(k);
  }
  if (support.size() == 1) {
    const Integer& c = root[support[0]];
    if (c == 1) return SignedEdge::Halfedge(support[0]);
    if (c == 2) return SignedEdge::Loop(support[0]);
  } else if (support.size() == 2 && root[support[0]] == 1) {
    const Integer& c = root[support[1]];
    if (c == -1) return SignedEdge::Positive(support[0], support[1]);
    if (c == 1) return SignedEdge::Negative(support[0], support[1]);
  }
  throw std::invalid_argument("vector " + root.ToString() +
                              " is not a classical positive root");
}

IntVector RootFromEdge(const SignedEdge& e, std::size_t n) {
  IntVector r(n);
  switch (e.kind) {
    case EdgeKind::kPositive:
      r[e.i] = 1;
      r[e.j] = -1;
      break;
    case EdgeKind::kNegative:
      r[e.i] = 1;
      r[e.j] = 1;
      break;
    case EdgeKind::kHalfedge:
      r[e.i] = 1;
      break;
    case EdgeKind::kNegativeLoop:
      r[e.i] = 2;
      break;
  }
  return r;
}

SignedGraph GraphFromRoots(std::span<const IntVector> roots, std::size_t n) {
  RequireDimension(roots, n);
  SignedGraph g(n);
  for (const IntVector& r : roots) g.Add(EdgeFromRoot(r));
  return g;
}

std::vector<IntVector> RootsFromGraph(const SignedGraph& g) {
  std::vector<IntVector> roots;
  roots.reserve(g.edges().size());
  for (const SignedEdge& e : g.edges()) {
    roots.push_back(RootFromEdge(e, g.vertex_count()));
  }
  return roots;
}

namespace {

// Union-find that tracks, for each vertex, the parity of negative edges on
// its tree path to the root.
class ParityForest {
 public:
  explicit ParityForest(std::size_t n) : parent_(n), parity_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  std::pair<std::size_t, int> Find(std::size_t v) {
    if (parent_[v] == v) return {v, 0};
    auto [root, p] = Find(parent_[v]);
    parent_[v] = root;
    parity_[v] ^= p;
    return {root, parity_[v]};
  }

  // Returns false if u and v were already connected; then *cycle_parity is
  // the parity of negative edges around the closed cycle.
  bool Union(std::size_t u, std::size_t v, int sign_parity, int* cycle_parity) {
    auto [ru, pu] = Find(u);
    auto [rv, pv] = Find(v);
    if (ru == rv) {
      *cycle_parity = pu ^ pv ^ sign_parity;
      return false;
    }
    parent_[ru] = rv;
    parity_[ru] = pu ^ pv ^ sign_parity;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<int> parity_;
};

}  // namespace

std::vector<ComponentShape> Components(const SignedGraph& g) {
  const std::size_t n = g.vertex_count();
  ParityForest forest(n);
  // Cycle-closing links, keyed later by component root.
  std::vector<std::pair<std::size_t, int>> closures;
  for (const SignedEdge& e : g.edges()) {
    if (!e.IsLink()) continue;
    int cycle_parity = 0;
    const int sign = e.kind == EdgeKind::kNegative ? 1 : 0;
    if (!forest.Union(e.i, e.j, sign, &cycle_parity)) {
      closures.emplace_back(e.i, cycle_parity);
    }
  }

  std::vector<std::size_t> slot(n, n);
  std::vector<ComponentShape> components;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t root = forest.Find(v).first;
    if (slot[root] == n) {
      slot[root] = components.size();
      components.emplace_back();
    }
    components[slot[root]].vertices.push_back(v);
  }
  for (const SignedEdge& e : g.edges()) {
    ComponentShape& c = components[slot[forest.Find(e.i).first]];
    switch (e.kind) {
      case EdgeKind::kPositive:
      case EdgeKind::kNegative:
        ++c.links;
        break;
      case EdgeKind::kHalfedge:
        ++c.halfedges;
        break;
      case EdgeKind::kNegativeLoop:
        ++c.loops;
        break;
    }
  }
  for (const auto& [v, parity] : closures) {
    ComponentShape& c = components[slot[forest.Find(v).first]];
    ++c.cycles;
    c.cycle_unbalanced = parity == 1;
  }
  return components;
}

std::optional<ComponentType> ClassifyComponent(const ComponentShape& c) {
  if (c.cycles + c.halfedges + c.loops > 1) return std::nullopt;
  if (c.cycles == 1) {
    if (!c.cycle_unbalanced) return std::nullopt;
    return ComponentType::kPseudotree;
  }
  if (c.halfedges == 1) return ComponentType::kHalfedgeTree;
  if (c.loops == 1) return ComponentType::kLoopTree;
  return ComponentType::kTree;
}

std::optional<ComponentStats> Classify(const SignedGraph& g) {
  ComponentStats stats;
  stats.edge_count = g.edges().size();
  for (const ComponentShape& c : Components(g)) {
    const auto type = ClassifyComponent(c);
    if (!type) return std::nullopt;
    switch (*type) {
      case ComponentType::kTree:
        ++stats.tc;
        if (c.vertices.size() % 2 != 0) stats.all_trees_even = false;
        break;
      case ComponentType::kHalfedgeTree:
        ++stats.hc;
        break;
      case ComponentType::kLoopTree:
        ++stats.lc;
        break;
      case ComponentType::kPseudotree:
        ++stats.pc;
        break;
    }
  }
  return stats;
}

bool AllTreeComponentsEven(const SignedGraph& g) {
  const auto stats = Classify(g);
  if (!stats) throw std::invalid_argument("graph is not a signed pseudoforest");
  return stats->all_trees_even;
}

SignedGraph SwitchVertex(const SignedGraph& g, std::size_t v) {
  if (v >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
  SignedGraph out(g.vertex_count());
  for (SignedEdge e : g.edges()) {
    if (e.IsLink() && (e.i == v || e.j == v)) {
      e.kind = e.kind == EdgeKind::kPositive ? EdgeKind::kNegative
                                             : EdgeKind::kPositive;
    }
    out.Add(e);
  }
  return out;
}

}  // namespace coxeter_ehrhart
