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

#ifndef SKRATES_CAPACITY_HPP_
#define SKRATES_CAPACITY_HPP_

#include <set>
#include <utility>
#include <vector>

#include "skrates/config.hpp"
#include "skrates/entropy.hpp"
#include "skrates/error.hpp"
#include "skrates/lp.hpp"
#include "skrates/mmi.hpp"

namespace skrates {

inline constexpr std::size_t kMaxOmniscienceVertices = 16;

struct OmniscienceRate {
  Rational value;
  std::vector<Rational> rates;
};

// R_CO = min r(V) s.t. r(B) >= H(Z_B | Z_{V\B}) for every nonempty B ⊊ V,
// r >= 0. Subset constraints are added lazily: solve the LP over the
// constraints found so far, scan all 2^m - 2 subsets for violations, repeat.
// The final point is the lexicographically smallest optimum of the full LP.
inline OmniscienceRate rco(const EntropyOracle& oracle) {
  const HypergraphSource& source = oracle.source();
  const std::size_t m = source.size();
  require_within_cap(m, kMaxOmniscienceVertices, "omniscience LP");
  const VertexMask all = source.all();

  std::vector<Rational> interior(std::size_t{all} + 1);
  for (VertexMask b = 1; b < all; ++b) interior[b] = oracle.cond_entropy(b);

  lp::LinearProgram program;
  program.sense = lp::Sense::kMinimize;
  program.objective.assign(m, Rational(1));
  std::set<VertexMask> active;
  auto add_row = [&](VertexMask b) {
    if (!active.insert(b).second) return;
    std::vector<Rational> row(m);
    for (std::size_t i = 0; i < m; ++i) row[i] = (b >> i & 1U) ? 1 : 0;
    program.add(std::move(row), lp::Relation::kGreaterEqual, interior[b]);
  };
  for (std::size_t i = 0; i < m; ++i) add_row(VertexMask{1} << i);

  for (;;) {
    const lp::Solution sol = lp::solve(program);
    if (sol.status != lp::Status::kOptimal) throw InternalConsistencyError("omniscience LP is not solvable");
    std::vector<VertexMask> violated;
    for (VertexMask b = 1; b < all; ++b) {
      if (interior[b] == 0 || active.count(b) != 0) continue;
      Rational load = 0;
      for (std::size_t i = 0; i < m; ++i) {
        if (b >> i & 1U) load += sol.point[i];
      }
      if (load < interior[b]) violated.push_back(b);
    }
    if (violated.empty()) return OmniscienceRate{sol.value, sol.point};
    for (VertexMask b : violated) add_row(b);
  }
}

inline OmniscienceRate rco(const HypergraphSource& source) { return rco(EntropyOracle(source)); }

struct CapacityReport {
  Rational total_entropy;  // H(Z_V)
  Rational omniscience_rate;
  std::vector<Rational> omniscience_point;
  Rational capacity;  // H(Z_V) - R_CO
  Rational mmi_crosscheck;
};

// C_S computed as H(Z_V) - R_CO and independently as I(Z_V).
inline CapacityReport capacity(const HypergraphSource& source, const MmiOptions& options = {}) {
  const EntropyOracle oracle(source);
  CapacityReport report;
  report.total_entropy = oracle.total();
  OmniscienceRate omniscience = rco(oracle);
  report.omniscience_rate = omniscience.value;
  report.omniscience_point = std::move(omniscience.rates);
  report.capacity = report.total_entropy - report.omniscience_rate;
  report.mmi_crosscheck = mmi(oracle, source.all(), options).value;
  if (report.capacity != report.mmi_crosscheck) {
    throw InternalConsistencyError("H(Z_V) - R_CO = " + format_rational(report.capacity) +
                                   " disagrees with the MMI " + format_rational(report.mmi_crosscheck));
  }
  return report;
}

// Checks that the piecewise-linear curve through (R, C(R)) samples, sorted
// by strictly increasing R, is non-decreasing and concave.
inline bool check_concavity(const std::vector<std::pair<Rational, Rational>>& curve) {
  for (std::size_t i = 1; i < curve.size(); ++i) {
    if (!(curve[i - 1].first < curve[i].first)) throw InputError("curve samples must be sorted by increasing R");
  }
  std::vector<Rational> slopes;
  for (std::size_t i = 1; i < curve.size(); ++i) {
    slopes.push_back((curve[i].second - curve[i - 1].second) / (curve[i].first - curve[i - 1].first));
  }
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    if (slopes[i] < 0) return false;
    if (i > 0 && slopes[i] > slopes[i - 1]) return false;
  }
  return true;
}

}  // namespace skrates

#endif  // SKRATES_CAPACITY_HPP_
