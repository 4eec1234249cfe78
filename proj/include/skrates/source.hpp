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

#ifndef SKRATES_SOURCE_HPP_
#define SKRATES_SOURCE_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "skrates/error.hpp"
#include "skrates/rational.hpp"

namespace skrates {

// Subsets of the vertex set are bitmasks over canonical vertex indices.
using VertexMask = std::uint32_t;

inline constexpr std::size_t kMaxVertices = 24;

inline VertexMask full_mask(std::size_t m) {
  return m >= 32 ? ~VertexMask{0} : ((VertexMask{1} << m) - 1);
}
inline int popcount(VertexMask mask) { return std::popcount(mask); }
inline VertexMask lowest_bit(VertexMask mask) { return mask & (~mask + 1); }
inline std::size_t lowest_index(VertexMask mask) {
  return static_cast<std::size_t>(std::countr_zero(mask));
}

// Orders ids so that all-digit ids compare numerically ("2" < "10") and come
// before any other id; everything else is plain lexicographic.
inline bool natural_id_less(std::string_view a, std::string_view b) {
  auto numeric = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
  };
  auto strip = [](std::string_view s) {
    const auto first = s.find_first_not_of('0');
    return first == std::string_view::npos ? s.substr(s.size() - 1) : s.substr(first);
  };
  const bool na = numeric(a);
  const bool nb = numeric(b);
  if (na != nb) return na;
  if (na) {
    const auto sa = strip(a);
    const auto sb = strip(b);
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    if (sa != sb) return sa < sb;
  }
  return a < b;
}

struct Edge {
  std::string id;
  VertexMask on = 0;
  Rational h;
};

// Edge as written in an input file, before vertex ids are resolved.
struct EdgeSpec {
  std::string id;
  std::vector<std::string> on;
  Rational h;
};

// A hypergraphical source: independent edge variables X_e with declared
// entropy h(e) > 0, each observed by the vertices in its edge set. Vertices
// are stored in natural id order and edges in natural id order.
class HypergraphSource {
 public:
  HypergraphSource(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges) {
    if (vertices.size() < 2) throw InputError("a source needs at least 2 vertices");
    if (vertices.size() > kMaxVertices) {
      throw CapExceededError("at most " + std::to_string(kMaxVertices) + " vertices are supported");
    }
    std::sort(vertices.begin(), vertices.end(),
              [](const std::string& a, const std::string& b) { return natural_id_less(a, b); });
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
      if (vertices[i] == vertices[i + 1]) throw InputError("duplicate vertex id '" + vertices[i] + "'");
    }
    vertices_ = std::move(vertices);
    std::set<std::string> seen;
    for (const EdgeSpec& spec : edges) {
      if (!seen.insert(spec.id).second) throw InputError("duplicate edge id '" + spec.id + "'");
      if (spec.on.empty()) throw InputError("edge '" + spec.id + "' has an empty vertex set");
      if (spec.h <= 0) throw InputError("edge '" + spec.id + "' must have positive entropy");
      VertexMask on = 0;
      for (const std::string& v : spec.on) on |= VertexMask{1} << index_of(v);
      edges_.push_back(Edge{spec.id, on, spec.h});
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& a, const Edge& b) { return natural_id_less(a.id, b.id); });
  }

  std::size_t size() const { return vertices_.size(); }
  VertexMask all() const { return full_mask(size()); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::size_t index_of(std::string_view id) const {
    const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id,
                                     [](const std::string& a, std::string_view b) { return natural_id_less(a, b); });
    if (it == vertices_.end() || *it != id) throw InputError("unknown vertex id '" + std::string(id) + "'");
    return static_cast<std::size_t>(it - vertices_.begin());
  }

  VertexMask mask_of(const std::vector<std::string>& ids) const {
    VertexMask mask = 0;
    for (const std::string& id : ids) mask |= VertexMask{1} << index_of(id);
    return mask;
  }

  std::vector<std::string> ids_of(VertexMask mask) const {
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < size(); ++i) {
      if (mask >> i & 1U) ids.push_back(vertices_[i]);
    }
    return ids;
  }

  void check_subset(VertexMask mask) const {
    if ((mask & ~all()) != 0) throw InputError("vertex subset refers to unknown vertices");
  }

  // PIN: every edge joins exactly two distinct vertices.
  bool is_pin() const {
    return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return popcount(e.on) == 2; });
  }

  // The source left after conditioning on Z_W: edges meeting W are deleted.
  HypergraphSource without_edges_touching(VertexMask w) const {
    HypergraphSource copy = *this;
    std::erase_if(copy.edges_, [w](const Edge& e) { return (e.on & w) != 0; });
    return copy;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
};

// c(B): total entropy of the edges whose vertex set is exactly B.
class WeightFunction {
 public:
  explicit WeightFunction(const HypergraphSource& source) {
    for (const Edge& e : source.edges()) weights_[e.on] += e.h;
  }

  Rational operator()(VertexMask b) const {
    const auto it = weights_.find(b);
    return it == weights_.end() ? Rational(0) : it->second;
  }

  // supp(c), ordered by mask value.
  std::vector<VertexMask> support() const {
    std::vector<VertexMask> out;
    for (const auto& [b, w] : weights_) {
      if (w > 0) out.push_back(b);
    }
    return out;
  }

  Rational total() const {
    Rational sum = 0;
    for (const auto& [b, w] : weights_) sum += w;
    return sum;
  }

  const std::map<VertexMask, Rational>& entries() const { return weights_; }

 private:
  std::map<VertexMask, Rational> weights_;
};

// Number of edges incident to each vertex, counting parallel edges
// separately. PIN only.
inline std::vector<std::size_t> vertex_degrees(const HypergraphSource& source) {
  if (!source.is_pin()) throw DomainError("vertex degrees are defined for PIN sources only");
  std::vector<std::size_t> degree(source.size(), 0);
  for (const Edge& e : source.edges()) {
    for (std::size_t i = 0; i < source.size(); ++i) degree[i] += e.on >> i & 1U;
  }
  return degree;
}

// Degrees in the simple graph supp(c). PIN only.
inline std::vector<std::size_t> support_degrees(const HypergraphSource& source) {
  if (!source.is_pin()) throw DomainError("vertex degrees are defined for PIN sources only");
  std::vector<std::size_t> degree(source.size(), 0);
  for (VertexMask b : WeightFunction(source).support()) {
    for (std::size_t i = 0; i < source.size(); ++i) degree[i] += b >> i & 1U;
  }
  return degree;
}

// A candidate (r_K, r_V). Rates are indexed by canonical vertex index.
struct RatePoint {
  Rational key_rate;
  std::vector<Rational> rates;

  Rational total(VertexMask b) const {
    Rational sum = 0;
    for (std::size_t i = 0; i < rates.size(); ++i) {
      if (b >> i & 1U) sum += rates[i];
    }
    return sum;
  }

  Rational total() const { return total(full_mask(rates.size())); }

  void validate(std::size_t m) const {
    if (rates.size() != m) throw InputError("rate point has the wrong number of vertex rates");
    if (key_rate < 0) throw InputError("key rate must be nonnegative");
    for (const Rational& r : rates) {
      if (r < 0) throw InputError("discussion rates must be nonnegative");
    }
  }

  friend bool operator==(const RatePoint&, const RatePoint&) = default;
};

}  // namespace skrates

#endif  // SKRATES_SOURCE_HPP_
