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

#ifndef SKRATES_GREEDY_HPP_
#define SKRATES_GREEDY_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "skrates/error.hpp"
#include "skrates/partition.hpp"
#include "skrates/rational.hpp"
#include "skrates/source.hpp"

namespace skrates {

// Subsets of a ground set S are bitmasks over the canonical element order.
using ElementMask = std::uint64_t;

inline constexpr std::size_t kMaxGroundSet = 63;
inline constexpr std::size_t kMaxVerifiedGroundSet = 12;

// A normalized set function f: 2^S -> Q over a finite ordered ground set.
class SetFunctionOracle {
 public:
  using Evaluator = std::function<Rational(ElementMask)>;

  SetFunctionOracle(std::vector<std::string> elements, Evaluator f) : elements_(std::move(elements)), f_(std::move(f)) {
    if (elements_.size() > kMaxGroundSet) throw CapExceededError("ground set too large");
    if ((*this)(0) != 0) throw DomainError("set function is not normalized: f(empty) != 0");
  }

  std::size_t size() const { return elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  ElementMask all() const { return size() == 64 ? ~ElementMask{0} : (ElementMask{1} << size()) - 1; }
  Rational operator()(ElementMask b) const { return f_(b); }

 private:
  std::vector<std::string> elements_;
  Evaluator f_;
};

namespace detail {

inline void require_verifiable(const SetFunctionOracle& f) {
  if (f.size() > kMaxVerifiedGroundSet) {
    throw CapExceededError("exhaustive set-function checks are capped at 12 elements");
  }
}

}  // namespace detail

// f(A+i) + f(A+j) >= f(A) + f(A+i+j) for all A and i, j outside A, which is
// equivalent to submodularity.
inline bool is_submodular(const SetFunctionOracle& f) {
  detail::require_verifiable(f);
  const std::size_t k = f.size();
  std::vector<Rational> value(std::size_t{1} << k);
  for (ElementMask b = 0; b < value.size(); ++b) value[b] = f(b);
  for (ElementMask a = 0; a < value.size(); ++a) {
    for (std::size_t i = 0; i < k; ++i) {
      if (a >> i & 1U) continue;
      for (std::size_t j = i + 1; j < k; ++j) {
        if (a >> j & 1U) continue;
        const ElementMask ai = a | ElementMask{1} << i;
        const ElementMask aj = a | ElementMask{1} << j;
        if (value[ai] + value[aj] < value[a] + value[ai | aj]) return false;
      }
    }
  }
  return true;
}

inline bool is_modular(const SetFunctionOracle& f) {
  detail::require_verifiable(f);
  for (ElementMask b = 1; b <= f.all(); ++b) {
    Rational sum = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (b >> i & 1U) sum += f(ElementMask{1} << i);
    }
    if (sum != f(b)) return false;
  }
  return true;
}

// A nonnegative measure on subsets of S, stored on its support.
using CoverMeasure = std::map<ElementMask, Rational>;

inline std::vector<Rational> marginals(const CoverMeasure& mu, std::size_t size) {
  std::vector<Rational> w(size, Rational(0));
  for (const auto& [b, value] : mu) {
    for (std::size_t s = 0; s < size; ++s) {
      if (b >> s & 1U) w[s] += value;
    }
  }
  return w;
}

inline Rational objective(const SetFunctionOracle& f, const CoverMeasure& mu) {
  Rational sum = 0;
  for (const auto& [b, value] : mu) sum += value * f(b);
  return sum;
}

// Element order for the greedy chain: descending weight, ties by canonical
// element index.
inline std::vector<std::size_t> greedy_order(const std::vector<Rational>& w) {
  std::vector<std::size_t> order(w.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&w](std::size_t a, std::size_t b) { return w[a] > w[b]; });
  return order;
}

// Edmonds' greedy solution of
//   min sum_B mu(B) f(B)  s.t.  sum_{B ∋ s} mu(B) = w_s, mu >= 0.
// With s_1, ..., s_k in greedy order and S_j = {s_1, ..., s_j}:
// mu(S_j) = w_{s_j} - w_{s_{j+1}} and mu(S_k) = w_{s_k}. Zero entries are
// omitted from the support.
inline CoverMeasure greedy_mu(const std::vector<Rational>& w) {
  if (w.size() > kMaxGroundSet) throw CapExceededError("ground set too large");
  for (const Rational& x : w) {
    if (x < 0) throw InputError("greedy weights must be nonnegative");
  }
  CoverMeasure mu;
  const std::vector<std::size_t> order = greedy_order(w);
  ElementMask chain = 0;
  for (std::size_t j = 0; j < order.size(); ++j) {
    chain |= ElementMask{1} << order[j];
    Rational drop = j + 1 < order.size() ? Rational(w[order[j]] - w[order[j + 1]]) : w[order[j]];
    if (drop > 0) mu.emplace(chain, std::move(drop));
  }
  return mu;
}

struct GreedyOptions {
  // Skip the exhaustive submodularity check (needed above 12 elements).
  bool waive_submodularity_check = false;
};

inline Rational greedy_value(const SetFunctionOracle& f, const std::vector<Rational>& w,
                             const GreedyOptions& options = {}) {
  if (w.size() != f.size()) throw InputError("weight vector does not match the ground set");
  if (!options.waive_submodularity_check && !is_submodular(f)) {
    throw DomainError("set function is not submodular");
  }
  return objective(f, greedy_mu(w));
}

inline bool crosses(ElementMask a, ElementMask b) {
  const ElementMask both = a & b;
  return both != a && both != b;
}

// Uncrossing: while two support sets B1, B2 are not nested, move
// delta = min(mu(B1), mu(B2)) from each of them onto B1 ∩ B2 and B1 ∪ B2.
// Marginals are unchanged and, for submodular f, the objective never grows.
// Mass on the empty set touches neither and is dropped. Pairs are taken in
// increasing (B1, B2) order. The potential sum mu(B) |B|^2 rises by a
// multiple of 1/D each step (D the common denominator of mu), so the loop
// ends, and the result is a chain.
inline CoverMeasure laminate(const SetFunctionOracle& f, CoverMeasure mu) {
  for (auto it = mu.begin(); it != mu.end();) {
    if (it->second < 0) throw InputError("cover measure must be nonnegative");
    if (it->first & ~f.all()) throw InputError("cover measure refers to elements outside the ground set");
    it = it->second == 0 || it->first == 0 ? mu.erase(it) : std::next(it);
  }
  for (;;) {
    std::pair<ElementMask, ElementMask> pair{0, 0};
    bool found = false;
    for (auto a = mu.begin(); a != mu.end() && !found; ++a) {
      for (auto b = std::next(a); b != mu.end(); ++b) {
        if (crosses(a->first, b->first)) {
          pair = {a->first, b->first};
          found = true;
          break;
        }
      }
    }
    if (!found) return mu;
    const auto [first, second] = pair;
    const Rational delta = min_rational(mu[first], mu[second]);
    mu[first] -= delta;
    mu[second] -= delta;
    if ((first & second) != 0) mu[first & second] += delta;
    mu[first | second] += delta;
    if (mu[first] == 0) mu.erase(first);
    if (mu[second] == 0) mu.erase(second);
  }
}

// For modular f the objective is the same for every feasible measure. The
// check samples measures by reversing uncrossing moves from the greedy
// solution: split Y into X ∪ (Y\X) or replace X ⊂ Y by two sets with that
// intersection and union.
inline bool modular_constancy_check(const SetFunctionOracle& f, const std::vector<Rational>& w, std::size_t trials,
                                    std::uint64_t seed = 1) {
  if (w.size() != f.size()) throw InputError("weight vector does not match the ground set");
  if (!is_modular(f)) throw DomainError("set function is not modular");
  std::mt19937_64 rng(seed);
  CoverMeasure mu = greedy_mu(w);
  const Rational reference = objective(f, mu);
  for (std::size_t t = 0; t < trials; ++t) {
    if (mu.empty()) break;
    std::vector<ElementMask> support;
    for (const auto& [b, v] : mu) support.push_back(b);
    const ElementMask y = support[rng() % support.size()];
    ElementMask x = 0;
    std::vector<ElementMask> inner;
    for (ElementMask b : support) {
      if (b != y && (b & ~y) == 0) inner.push_back(b);
    }
    if (!inner.empty() && rng() % 2 == 0) x = inner[rng() % inner.size()];
    // Random B1 with x ⊆ B1 ⊆ y; B2 completes the pair.
    const ElementMask free = y & ~x;
    ElementMask b1 = x;
    for (std::size_t s = 0; s < f.size(); ++s) {
      if ((free >> s & 1U) && rng() % 2 == 0) b1 |= ElementMask{1} << s;
    }
    const ElementMask b2 = x | (y & ~b1);
    if (b1 == x || b1 == y || b1 == b2) continue;
    Rational delta = mu[y];
    if (x != 0) delta = min_rational(delta, mu[x]);
    delta *= make_rational(static_cast<long>(rng() % 4 + 1), 4L);
    mu[y] -= delta;
    if (x != 0) mu[x] -= delta;
    mu[b1] += delta;
    mu[b2] += delta;
    for (auto it = mu.begin(); it != mu.end();) it = it->second == 0 ? mu.erase(it) : std::next(it);
    if (marginals(mu, f.size()) != w) throw InternalConsistencyError("sampled measure lost feasibility");
    if (objective(f, mu) != reference) return false;
  }
  return true;
}

// Ground set {0} ∪ E ∪ V used to bound the edge-crossing inequality, with
// weights w_0 = |P|, w_e = number of blocks of P met by e, w_i = 1. Elements
// are ordered 0, then edges, then vertices, so greedy tie-breaking puts 0
// first and edges before vertices.
struct CrossingWeights {
  enum class Kind { kRoot, kEdge, kVertex };
  struct Element {
    Kind kind;
    std::string id;
  };
  std::vector<Element> elements;
  std::vector<Rational> weights;

  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    for (const Element& e : elements) {
      out.push_back(e.kind == Kind::kRoot ? "0" : (e.kind == Kind::kEdge ? "e:" : "v:") + e.id);
    }
    return out;
  }
};

inline CrossingWeights crossing_weights(const HypergraphSource& source, const Partition& p) {
  require_partition_of(p, source.all());
  CrossingWeights out;
  out.elements.push_back({CrossingWeights::Kind::kRoot, "0"});
  out.weights.emplace_back(static_cast<long>(p.size()));
  std::vector<std::pair<long, const Edge*>> edges;
  for (const Edge& e : source.edges()) {
    long met = 0;
    for (VertexMask block : p.blocks) met += (block & e.on) != 0 ? 1 : 0;
    edges.emplace_back(met, &e);
  }
  // Descending weight, then edge id.
  std::stable_sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  for (const auto& [met, e] : edges) {
    out.elements.push_back({CrossingWeights::Kind::kEdge, e->id});
    out.weights.emplace_back(met);
  }
  for (const std::string& v : source.vertices()) {
    out.elements.push_back({CrossingWeights::Kind::kVertex, v});
    out.weights.emplace_back(1);
  }
  return out;
}

}  // namespace skrates

#endif  // SKRATES_GREEDY_HPP_
