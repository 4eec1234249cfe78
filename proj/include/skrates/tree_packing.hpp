// Copyright 2026 The skrates Authors.
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

#ifndef SKRATES_TREE_PACKING_HPP_
#define SKRATES_TREE_PACKING_HPP_

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "skrates/config.hpp"
#include "skrates/error.hpp"
#include "skrates/lp.hpp"
#include "skrates/source.hpp"

namespace skrates {

inline constexpr std::size_t kMaxPackingVertices = 10;
inline constexpr std::size_t kMaxSpanningTrees = 100000;

// A spanning tree over vertex pairs (ξ-classes), pairs in increasing mask
// order. Parallel edges with the same pair are one class.
struct SpanningTree {
  std::vector<VertexMask> pairs;

  std::size_t degree(std::size_t vertex) const {
    return static_cast<std::size_t>(
        std::count_if(pairs.begin(), pairs.end(), [vertex](VertexMask p) { return (p >> vertex & 1U) != 0; }));
  }

  friend bool operator==(const SpanningTree&, const SpanningTree&) = default;
};

struct PackedTree {
  SpanningTree tree;
  Rational weight;
};

struct TreePacking {
  std::vector<PackedTree> trees;

  Rational value() const {
    Rational sum = 0;
    for (const PackedTree& t : trees) sum += t.weight;
    return sum;
  }
};

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

inline std::pair<std::size_t, std::size_t> endpoints(VertexMask pair) {
  const std::size_t a = lowest_index(pair);
  return {a, lowest_index(pair & (pair - 1))};
}

inline void extend_forest(const std::vector<VertexMask>& pairs, std::size_t next, std::size_t m,
                          std::vector<VertexMask>& chosen, std::vector<SpanningTree>& out) {
  if (chosen.size() + 1 == m) {
    out.push_back(SpanningTree{chosen});
    if (out.size() > kMaxSpanningTrees) throw CapExceededError("more than 100000 spanning trees");
    return;
  }
  for (std::size_t k = next; k < pairs.size(); ++k) {
    if (pairs.size() - k < m - 1 - chosen.size()) return;
    DisjointSets sets(m);
    for (VertexMask p : chosen) {
      const auto [a, b] = endpoints(p);
      sets.unite(a, b);
    }
    const auto [a, b] = endpoints(pairs[k]);
    if (!sets.unite(a, b)) continue;
    chosen.push_back(pairs[k]);
    extend_forest(pairs, k + 1, m, chosen, out);
    chosen.pop_back();
  }
}

inline void require_pin(const HypergraphSource& source, const char* what) {
  if (!source.is_pin()) throw DomainError(std::string(what) + " requires a PIN source");
  require_within_cap(source.size(), kMaxPackingVertices, what);
}

}  // namespace detail

// All spanning trees of the simple graph supp(c), in lexicographic order of
// their sorted pair lists. Empty when the graph is disconnected.
inline std::vector<SpanningTree> enumerate_spanning_trees(const HypergraphSource& source) {
  detail::require_pin(source, "spanning tree enumeration");
  const std::vector<VertexMask> pairs = WeightFunction(source).support();
  std::vector<SpanningTree> out;
  std::vector<VertexMask> chosen;
  detail::extend_forest(pairs, 0, source.size(), chosen, out);
  return out;
}

// The edge-id trees represented by one pair-class tree: one edge id chosen
// from each pair's parallel class.
inline std::vector<std::vector<std::string>> expand_edge_ids(const HypergraphSource& source,
                                                             const SpanningTree& tree) {
  std::vector<std::vector<std::string>> out{{}};
  for (VertexMask pair : tree.pairs) {
    std::vector<std::vector<std::string>> next;
    for (const auto& prefix : out) {
      for (const Edge& e : source.edges()) {
        if (e.on != pair) continue;
        next.push_back(prefix);
        next.back().push_back(e.id);
      }
    }
    out = std::move(next);
  }
  return out;
}

struct PackingResult {
  Rational value;
  TreePacking packing;
};

// Maximum fractional tree packing: maximize the total weight of spanning
// trees subject to, for every pair B, the weight on trees using B being at
// most c(B).
inline PackingResult max_packing(const HypergraphSource& source) {
  detail::require_pin(source, "tree packing");
  const std::vector<SpanningTree> trees = enumerate_spanning_trees(source);
  PackingResult result{Rational(0), {}};
  if (trees.empty()) return result;
  const WeightFunction c(source);
  lp::LinearProgram program;
  program.sense = lp::Sense::kMaximize;
  program.objective.assign(trees.size(), Rational(1));
  for (VertexMask pair : c.support()) {
    std::vector<Rational> row(trees.size());
    for (std::size_t j = 0; j < trees.size(); ++j) {
      const auto& used = trees[j].pairs;
      row[j] = std::find(used.begin(), used.end(), pair) != used.end() ? 1 : 0;
    }
    program.add(std::move(row), lp::Relation::kLessEqual, c(pair));
  }
  const lp::Solution sol = lp::solve(program);
  if (sol.status != lp::Status::kOptimal) throw InternalConsistencyError("tree packing LP is not solvable");
  result.value = sol.value;
  for (std::size_t j = 0; j < trees.size(); ++j) {
    if (sol.point[j] > 0) result.packing.trees.push_back(PackedTree{trees[j], sol.point[j]});
  }
  return result;
}

// r_K = sum_j eta_j and r_i = sum_j (d_{T_j}(i) - 1) eta_j.
inline RatePoint packing_to_rates(const TreePacking& packing, std::size_t vertices) {
  RatePoint point{Rational(0), std::vector<Rational>(vertices, Rational(0))};
  for (const PackedTree& t : packing.trees) {
    point.key_rate += t.weight;
    for (std::size_t i = 0; i < vertices; ++i) {
      point.rates[i] += (static_cast<long>(t.tree.degree(i)) - 1L) * t.weight;
    }
  }
  return point;
}

inline bool is_spanning_tree(const SpanningTree& tree, std::size_t vertices) {
  if (tree.pairs.size() + 1 != vertices) return false;
  detail::DisjointSets sets(vertices);
  for (VertexMask pair : tree.pairs) {
    if (popcount(pair) != 2 || (pair & ~full_mask(vertices)) != 0) return false;
    const auto [a, b] = detail::endpoints(pair);
    if (!sets.unite(a, b)) return false;
  }
  return true;
}

struct PackingCheck {
  bool ok = true;
  // c(B) minus the weight packed on B, for every pair in supp(c) or used by
  // some tree.
  std::map<VertexMask, Rational> residuals;
};

inline PackingCheck verify_packing(const HypergraphSource& source, const TreePacking& packing) {
  const WeightFunction c(source);
  PackingCheck check;
  for (VertexMask pair : c.support()) {
    if (popcount(pair) == 2) check.residuals[pair] = c(pair);
  }
  for (const PackedTree& t : packing.trees) {
    if (!is_spanning_tree(t.tree, source.size())) throw DomainError("packing contains a tree that is not spanning");
    if (t.weight < 0) throw DomainError("packing weights must be nonnegative");
    for (VertexMask pair : t.tree.pairs) {
      auto [it, inserted] = check.residuals.try_emplace(pair, c(pair));
      it->second -= t.weight;
    }
  }
  for (const auto& [pair, residual] : check.residuals) {
    if (residual < 0) check.ok = false;
  }
  return check;
}

}  // namespace skrates

#endif  // SKRATES_TREE_PACKING_HPP_
