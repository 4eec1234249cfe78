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

#ifndef SKRATES_BOUNDS_HPP_
#define SKRATES_BOUNDS_HPP_

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "skrates/config.hpp"
#include "skrates/entropy.hpp"
#include "skrates/error.hpp"
#include "skrates/lp.hpp"
#include "skrates/mmi.hpp"
#include "skrates/partition.hpp"
#include "skrates/source.hpp"

namespace skrates {

// Converse bounds on the achievable region of (r_K, r_V).
//
// Subset-partition bound: for |B| >= 2 and P ∈ Π'(B),
//   r(V\B) >= (|P| - 1) [r_K - I_P(Z_B)].
// Edge-crossing bound (hypergraphical sources): for P ∈ Π'(V),
//   alpha(P) r(V) >= [1 - alpha(P)] r_K,
// where alpha(P) = (max_e #blocks met by e - 1) / (|P| - 1).

enum class CertificateKind { kSubsetPartition, kEdgeCrossing };

inline const char* to_string(CertificateKind kind) {
  return kind == CertificateKind::kSubsetPartition ? "subset_partition" : "edge_crossing";
}

// A linear inequality row · (r_K, r_1, ..., r_m) >= rhs.
struct Inequality {
  std::vector<Rational> row;
  Rational rhs;

  Rational lhs(const RatePoint& point) const {
    Rational sum = row[0] * point.key_rate;
    for (std::size_t i = 0; i < point.rates.size(); ++i) sum += row[i + 1] * point.rates[i];
    return sum;
  }
  bool satisfied_by(const RatePoint& point) const { return lhs(point) >= rhs; }

  friend bool operator==(const Inequality&, const Inequality&) = default;
};

struct BoundCertificate {
  CertificateKind kind = CertificateKind::kSubsetPartition;
  VertexMask subset = 0;  // B; the whole vertex set for edge-crossing bounds
  Partition partition;
  // Subset-partition: |P| - 1 and I_P(Z_B). Edge-crossing: alpha(P).
  Rational multiplier;
  Rational partition_info;
  Rational alpha;
  Inequality inequality;
};

// Lower bound on r(V\B) implied at key rate r_K; may be negative (vacuous).
inline Rational partition_bound(const EntropyOracle& oracle, VertexMask b, const Partition& p, const Rational& key_rate) {
  if (popcount(b) < 2) throw InputError("the subset-partition bound needs |B| >= 2");
  return static_cast<long>(p.size() - 1) * (key_rate - partition_info(oracle, b, p));
}

inline Rational partition_bound(const HypergraphSource& source, VertexMask b, const Partition& p,
                           const Rational& key_rate) {
  return partition_bound(EntropyOracle(source), b, p, key_rate);
}

// The subset-partition bound at the fundamental partition of Z_B.
inline Rational mmi_bound(const EntropyOracle& oracle, VertexMask b, const Rational& key_rate) {
  if (popcount(b) < 2) throw InputError("the MMI bound needs |B| >= 2");
  const MmiResult best = mmi(oracle, b);
  return static_cast<long>(best.fundamental.size() - 1) * (key_rate - best.value);
}

inline Rational mmi_bound(const HypergraphSource& source, VertexMask b, const Rational& key_rate) {
  return mmi_bound(EntropyOracle(source), b, key_rate);
}

inline Rational alpha(const HypergraphSource& source, const Partition& p) {
  require_partition_of(p, source.all());
  long widest = 1;
  for (const Edge& e : source.edges()) {
    long met = 0;
    for (VertexMask block : p.blocks) met += (block & e.on) != 0 ? 1 : 0;
    widest = std::max(widest, met);
  }
  return make_rational(widest - 1, static_cast<long>(p.size() - 1));
}

inline BoundCertificate make_partition_certificate(const EntropyOracle& oracle, VertexMask b, const Partition& p) {
  const std::size_t m = oracle.source().size();
  BoundCertificate cert;
  cert.kind = CertificateKind::kSubsetPartition;
  cert.subset = b;
  cert.partition = p;
  cert.multiplier = static_cast<long>(p.size() - 1);
  cert.partition_info = partition_info(oracle, b, p);
  cert.inequality.row.assign(m + 1, Rational(0));
  cert.inequality.row[0] = -cert.multiplier;
  for (std::size_t i = 0; i < m; ++i) {
    if (!(b >> i & 1U)) cert.inequality.row[i + 1] = 1;
  }
  cert.inequality.rhs = -cert.multiplier * cert.partition_info;
  return cert;
}

inline BoundCertificate make_crossing_certificate(const HypergraphSource& source, const Partition& p) {
  const std::size_t m = source.size();
  BoundCertificate cert;
  cert.kind = CertificateKind::kEdgeCrossing;
  cert.subset = source.all();
  cert.partition = p;
  cert.alpha = alpha(source, p);
  cert.inequality.row.assign(m + 1, cert.alpha);
  cert.inequality.row[0] = cert.alpha - 1;
  cert.inequality.rhs = 0;
  return cert;
}

struct CrossingCheck {
  bool satisfied = true;
  BoundCertificate certificate;
};

// Exact check of the edge-crossing bound for one partition. alpha = 0 makes
// the inequality read r_K <= 0.
inline CrossingCheck crossing_bound(const HypergraphSource& source, const Partition& p, const RatePoint& point) {
  point.validate(source.size());
  CrossingCheck check;
  check.certificate = make_crossing_certificate(source, p);
  check.satisfied = check.certificate.inequality.satisfied_by(point);
  return check;
}

// Subsets with at least two elements, by size then lexicographically by
// their sorted index lists.
inline std::vector<VertexMask> subsets_by_size(std::size_t m, std::size_t min_size = 2) {
  std::vector<VertexMask> out;
  for (std::size_t k = min_size; k <= m; ++k) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    for (;;) {
      VertexMask mask = 0;
      for (std::size_t i : idx) mask |= VertexMask{1} << i;
      out.push_back(mask);
      std::size_t pos = k;
      while (pos > 0 && idx[pos - 1] == m - k + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

struct OuterSearchCaps {
  std::size_t max_vertices = enumeration_cap();
};

// Every subset-partition certificate (B in subsets_by_size order, P in
// restricted-growth order) followed by every edge-crossing certificate.
inline std::vector<BoundCertificate> generate_certificates(const HypergraphSource& source,
                                                           const OuterSearchCaps& caps = {}) {
  require_within_cap(source.size(), caps.max_vertices, "outer bound enumeration");
  const EntropyOracle oracle(source);
  std::vector<BoundCertificate> out;
  for (VertexMask b : subsets_by_size(source.size())) {
    PartitionStream stream(b);
    while (auto p = stream.next()) out.push_back(make_partition_certificate(oracle, b, *p));
  }
  PartitionStream stream(source.all());
  while (auto p = stream.next()) out.push_back(make_crossing_certificate(source, *p));
  return out;
}

struct OuterRegionQuery {
  RatePoint point;
  std::vector<BoundCertificate> violations;
  std::size_t certificates_checked = 0;

  bool feasible() const { return violations.empty(); }
};

inline OuterRegionQuery outer_check(const HypergraphSource& source, const RatePoint& point,
                                    const OuterSearchCaps& caps = {}) {
  point.validate(source.size());
  OuterRegionQuery query{point, {}, 0};
  for (BoundCertificate& cert : generate_certificates(source, caps)) {
    ++query.certificates_checked;
    if (!cert.inequality.satisfied_by(point)) query.violations.push_back(std::move(cert));
  }
  return query;
}

// Inequalities defining the outer region, with redundant rows removed: per
// (B, |P|) only the smallest I_P(Z_B) is kept, edge-crossing rows are
// deduplicated by alpha, and rows implied by nonnegativity are dropped.
inline std::vector<Inequality> outer_inequalities(const HypergraphSource& source, const OuterSearchCaps& caps = {}) {
  std::map<std::pair<VertexMask, std::size_t>, const BoundCertificate*> tightest;
  std::map<Rational, const BoundCertificate*> by_alpha;
  const std::vector<BoundCertificate> certs = generate_certificates(source, caps);
  std::vector<Inequality> rows;
  for (const BoundCertificate& cert : certs) {
    if (cert.kind == CertificateKind::kSubsetPartition) {
      auto [it, inserted] = tightest.try_emplace({cert.subset, cert.partition.size()}, &cert);
      if (!inserted && cert.partition_info < it->second->partition_info) it->second = &cert;
    } else {
      by_alpha.try_emplace(cert.alpha, &cert);
    }
  }
  auto implied_by_nonnegativity = [](const Inequality& q) {
    return q.rhs <= 0 && std::all_of(q.row.begin(), q.row.end(), [](const Rational& x) { return x >= 0; });
  };
  for (const BoundCertificate& cert : certs) {
    const bool kept = cert.kind == CertificateKind::kSubsetPartition
                          ? tightest.at({cert.subset, cert.partition.size()}) == &cert
                          : by_alpha.at(cert.alpha) == &cert;
    if (kept && !implied_by_nonnegativity(cert.inequality)) rows.push_back(cert.inequality);
  }
  return rows;
}

namespace detail {

inline lp::LinearProgram outer_program(std::size_t m, const std::vector<Inequality>& rows) {
  lp::LinearProgram program;
  program.objective.assign(m + 1, Rational(0));
  for (const Inequality& q : rows) program.add(q.row, lp::Relation::kGreaterEqual, q.rhs);
  return program;
}

}  // namespace detail

// Upper bound on C_S(R): max r_K over the outer region with r(V) <= R.
inline Rational outer_capacity_curve(const HypergraphSource& source, const Rational& budget,
                                     const OuterSearchCaps& caps = {}) {
  if (budget < 0) throw InputError("the discussion budget R must be nonnegative");
  const std::size_t m = source.size();
  lp::LinearProgram program = detail::outer_program(m, outer_inequalities(source, caps));
  program.sense = lp::Sense::kMaximize;
  program.objective[0] = 1;
  std::vector<Rational> total(m + 1, Rational(1));
  total[0] = 0;
  program.add(std::move(total), lp::Relation::kLessEqual, budget);
  const lp::Solution sol = lp::solve(program, {.lexicographic = false});
  if (sol.status != lp::Status::kOptimal) throw InternalConsistencyError("outer capacity LP is not solvable");
  return sol.value;
}

// Smallest r(V) over the outer region at a fixed key rate; nullopt when the
// key rate itself is excluded.
inline std::optional<Rational> outer_min_total_rate(const HypergraphSource& source, const Rational& key_rate,
                                                    const OuterSearchCaps& caps = {}) {
  const std::size_t m = source.size();
  lp::LinearProgram program = detail::outer_program(m, outer_inequalities(source, caps));
  program.sense = lp::Sense::kMinimize;
  for (std::size_t i = 1; i <= m; ++i) program.objective[i] = 1;
  std::vector<Rational> fix(m + 1, Rational(0));
  fix[0] = 1;
  program.add(std::move(fix), lp::Relation::kEqual, key_rate);
  const lp::Solution sol = lp::solve(program, {.lexicographic = false});
  if (sol.status == lp::Status::kInfeasible) return std::nullopt;
  if (sol.status != lp::Status::kOptimal) throw InternalConsistencyError("outer total-rate LP is unbounded");
  return sol.value;
}

// Region of a PIN whose support supp(c) is a spanning tree:
//   0 <= r_K <= min edge weight, r_i >= (d(i) - 1) r_K.
struct TreePinRegion {
  Rational capacity;
  std::vector<std::size_t> degrees;
};

inline bool support_is_spanning_tree(const HypergraphSource& source) {
  if (!source.is_pin()) return false;
  const std::vector<VertexMask> support = WeightFunction(source).support();
  if (support.size() + 1 != source.size()) return false;
  VertexMask reached = 1;
  for (bool grew = true; grew;) {
    grew = false;
    for (VertexMask pair : support) {
      if ((pair & reached) != 0 && (pair & ~reached) != 0) {
        reached |= pair;
        grew = true;
      }
    }
  }
  return reached == source.all();
}

inline TreePinRegion tree_pin_region(const HypergraphSource& source) {
  if (!support_is_spanning_tree(source)) throw DomainError("supp(c) is not a spanning tree of a PIN");
  const WeightFunction c(source);
  TreePinRegion region;
  const std::vector<VertexMask> support = c.support();
  region.capacity = c(support.front());
  for (VertexMask pair : support) region.capacity = min_rational(region.capacity, c(pair));
  region.degrees = support_degrees(source);
  return region;
}

inline bool tree_pin_check(const TreePinRegion& region, const RatePoint& point) {
  if (point.rates.size() != region.degrees.size()) throw InputError("rate point has the wrong dimension");
  if (point.key_rate < 0 || point.key_rate > region.capacity) return false;
  for (std::size_t i = 0; i < region.degrees.size(); ++i) {
    if (point.rates[i] < (static_cast<long>(region.degrees[i]) - 1L) * point.key_rate) return false;
  }
  return true;
}

inline bool tree_pin_check(const HypergraphSource& source, const RatePoint& point) {
  return tree_pin_check(tree_pin_region(source), point);
}

// C_S(R) = min{R / (|V| - 2), C_S} for PINs with |V| >= 3.
struct PinCurve {
  Rational capacity;
  std::size_t vertices = 0;

  Rational operator()(const Rational& budget) const {
    return min_rational(budget / static_cast<long>(vertices - 2), capacity);
  }
  Rational communication_complexity() const { return static_cast<long>(vertices - 2) * capacity; }
};

inline PinCurve pin_curve(const HypergraphSource& source) {
  if (!source.is_pin()) throw DomainError("the capacity curve formula applies to PIN sources only");
  if (source.size() < 3) throw DomainError("the capacity curve formula needs at least 3 vertices");
  return PinCurve{mmi(source, source.all()).value, source.size()};
}

inline Rational pin_capacity_curve(const HypergraphSource& source, const Rational& budget) {
  if (budget < 0) throw InputError("the discussion budget R must be nonnegative");
  return pin_curve(source)(budget);
}

}  // namespace skrates

#endif  // SKRATES_BOUNDS_HPP_
