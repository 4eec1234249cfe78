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

#include <gtest/gtest.h>

#include <random>

#include "skrates/skrates.hpp"
#include "support/test_support.hpp"

namespace skrates {
namespace {

using lp::Relation;
using lp::Sense;
using lp::Status;

std::vector<Rational> row(std::initializer_list<long> values) {
  std::vector<Rational> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

TEST(Lp, OneVariable) {
  lp::LinearProgram p;
  p.objective = row({1});
  p.add(row({1}), Relation::kGreaterEqual, make_rational(3, 2));
  const lp::Solution s = lp::solve(p);
  ASSERT_EQ(s.status, Status::kOptimal);
  EXPECT_EQ(s.value, make_rational(3, 2));
  EXPECT_EQ(s.point, std::vector<Rational>{make_rational(3, 2)});
}

TEST(Lp, InfeasibleAndUnbounded) {
  lp::LinearProgram p;
  p.objective = row({1});
  p.add(row({1}), Relation::kLessEqual, Rational(1));
  p.add(row({1}), Relation::kGreaterEqual, Rational(2));
  EXPECT_EQ(lp::solve(p).status, Status::kInfeasible);

  lp::LinearProgram q;
  q.sense = Sense::kMaximize;
  q.objective = row({1, 1});
  q.add(row({1, -1}), Relation::kLessEqual, Rational(1));
  EXPECT_EQ(lp::solve(q).status, Status::kUnbounded);
}

TEST(Lp, UpperBoundsAndEqualities) {
  lp::LinearProgram p;
  p.sense = Sense::kMaximize;
  p.objective = row({2, 3});
  p.upper_bounds = {Rational(4), std::nullopt};
  p.add(row({1, 1}), Relation::kEqual, Rational(5));
  const lp::Solution s = lp::solve(p);
  ASSERT_EQ(s.status, Status::kOptimal);
  EXPECT_EQ(s.value, Rational(15));
  EXPECT_EQ(s.point, row({0, 5}));
}

TEST(Lp, LexicographicTieBreak) {
  // min 0 s.t. x + y = 1: every point on the segment is optimal.
  lp::LinearProgram p;
  p.objective = row({0, 0});
  p.add(row({1, 1}), Relation::kEqual, Rational(1));
  EXPECT_EQ(lp::solve(p).point, row({0, 1}));
}

TEST(Lp, RedundantEqualityRows) {
  lp::LinearProgram p;
  p.objective = row({1, 2});
  p.add(row({1, 1}), Relation::kEqual, Rational(2));
  p.add(row({2, 2}), Relation::kEqual, Rational(4));
  const lp::Solution s = lp::solve(p);
  ASSERT_EQ(s.status, Status::kOptimal);
  EXPECT_EQ(s.value, Rational(2));
}

TEST(Lp, RejectsMismatchedRows) {
  lp::LinearProgram p;
  p.objective = row({1, 1});
  p.add(row({1}), Relation::kEqual, Rational(1));
  EXPECT_THROW(lp::solve(p), InputError);
}

// Random small LPs against exhaustive basic-point enumeration.
TEST(Lp, AgreesWithVertexEnumeration) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> coef(-3, 4);
  int compared = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 4;
    lp::LinearProgram p;
    p.sense = trial % 2 ? Sense::kMaximize : Sense::kMinimize;
    for (std::size_t j = 0; j < n; ++j) p.objective.emplace_back(coef(rng));
    const std::size_t rows = 1 + rng() % 4;
    for (std::size_t r = 0; r < rows; ++r) {
      std::vector<Rational> a;
      for (std::size_t j = 0; j < n; ++j) a.emplace_back(coef(rng));
      const int kind = static_cast<int>(rng() % 3);
      p.add(a, kind == 0 ? Relation::kLessEqual : kind == 1 ? Relation::kGreaterEqual : Relation::kEqual,
            Rational(coef(rng) + 2));
    }
    // Box the region so the optimum is finite whenever feasible.
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Rational> unit(n);
      unit[j] = 1;
      p.add(unit, Relation::kLessEqual, Rational(5));
    }
    const lp::Solution s = lp::solve(p);
    const auto oracle = testing::vertex_enumeration_optimum(p);
    if (!oracle) {
      EXPECT_EQ(s.status, Status::kInfeasible) << "trial " << trial;
      continue;
    }
    ASSERT_EQ(s.status, Status::kOptimal) << "trial " << trial;
    EXPECT_EQ(s.value, *oracle) << "trial " << trial;
    ++compared;
  }
  EXPECT_GT(compared, 100);
}

TEST(Capacity, Examples) {
  const auto tri = testing::triangle_pin();
  const CapacityReport t = capacity(tri);
  EXPECT_EQ(t.omniscience_rate, make_rational(3, 2));
  EXPECT_EQ(t.capacity, make_rational(3, 2));
  EXPECT_EQ(t.total_entropy, Rational(3));

  const auto mot = testing::motivating_pin();
  const CapacityReport m = capacity(mot);
  EXPECT_EQ(m.omniscience_rate, Rational(2));
  EXPECT_EQ(m.capacity, Rational(1));
  EXPECT_EQ(m.mmi_crosscheck, Rational(1));

  const auto two = testing::make_source({"1", "2"}, {{"a", {"1", "2"}, "1"}});
  EXPECT_EQ(rco(two).value, Rational(0));
  EXPECT_EQ(capacity(two).capacity, Rational(1));
}

// R_CO from the full LP with every subset row present, no lazy rows.
Rational direct_rco(const HypergraphSource& s) {
  const EntropyOracle h(s);
  const std::size_t m = s.size();
  lp::LinearProgram p;
  p.objective.assign(m, Rational(1));
  for (VertexMask b = 1; b < s.all(); ++b) {
    std::vector<Rational> a(m);
    for (std::size_t i = 0; i < m; ++i) a[i] = (b >> i & 1U) ? 1 : 0;
    p.add(a, Relation::kGreaterEqual, h.cond_entropy(b));
  }
  return lp::solve(p, {.lexicographic = false}).value;
}

TEST(Capacity, OmniscienceIdentityOnRandomHypergraphs) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const HypergraphSource s = testing::random_hypergraph(rng, 2 + trial % 5, 1 + trial % 8);
    const CapacityReport r = capacity(s);
    EXPECT_EQ(r.omniscience_rate, direct_rco(s));
    EXPECT_EQ(r.capacity, r.mmi_crosscheck);
    EXPECT_EQ(r.omniscience_rate, r.total_entropy - mmi(s, s.all()).value);
    // The returned point is feasible and attains the value.
    const EntropyOracle h(s);
    Rational sum = 0;
    for (const Rational& x : r.omniscience_point) sum += x;
    EXPECT_EQ(sum, r.omniscience_rate);
    for (VertexMask b = 1; b < s.all(); ++b) {
      Rational load = 0;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (b >> i & 1U) load += r.omniscience_point[i];
      }
      EXPECT_GE(load, h.cond_entropy(b));
    }
  }
}

TEST(Capacity, Concavity) {
  std::vector<std::pair<Rational, Rational>> curve;
  for (const char* r : {"0", "1/2", "1", "3/2", "2"}) {
    const Rational x = parse_rational(r);
    curve.emplace_back(x, min_rational(x, make_rational(3, 2)));
  }
  EXPECT_TRUE(check_concavity(curve));
  EXPECT_FALSE(check_concavity({{0, 0}, {1, 0}, {2, 1}}));
  EXPECT_TRUE(check_concavity({{0, 2}, {1, 2}, {3, 2}}));
  EXPECT_FALSE(check_concavity({{0, 2}, {1, 1}}));
  EXPECT_THROW(check_concavity({{1, 0}, {0, 0}}), InputError);
}

}  // namespace
}  // namespace skrates
