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

SetFunctionOracle cardinality(std::size_t k) {
  std::vector<std::string> names;
  for (std::size_t s = 0; s < k; ++s) names.push_back("s" + std::to_string(s));
  return SetFunctionOracle(names, [](ElementMask b) { return Rational(std::popcount(b)); });
}

std::vector<Rational> weights(std::initializer_list<long> values) {
  std::vector<Rational> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

TEST(Greedy, OracleValidation) {
  EXPECT_THROW(SetFunctionOracle({"x"}, [](ElementMask) { return Rational(1); }), DomainError);
  EXPECT_TRUE(is_submodular(cardinality(4)));
  EXPECT_TRUE(is_modular(cardinality(4)));
  const SetFunctionOracle square({"x", "y", "z"}, [](ElementMask b) {
    const long k = std::popcount(b);
    return Rational(k * k);
  });
  EXPECT_FALSE(is_submodular(square));
  std::mt19937_64 rng(61);
  for (int t = 0; t < 20; ++t) EXPECT_TRUE(is_submodular(testing::random_submodular(rng, 1 + t % 5)));
}

TEST(Greedy, MuExamples) {
  CoverMeasure m = greedy_mu(weights({3, 1}));
  EXPECT_EQ(m, (CoverMeasure{{0b01, Rational(2)}, {0b11, Rational(1)}}));
  m = greedy_mu(weights({2, 2, 2}));
  EXPECT_EQ(m, (CoverMeasure{{0b111, Rational(2)}}));
  // Stable order: ties keep index order.
  m = greedy_mu(weights({1, 3, 3}));
  EXPECT_EQ(m, (CoverMeasure{{0b110, Rational(2)}, {0b111, Rational(1)}}));
  EXPECT_THROW(greedy_mu(weights({1, -1})), InputError);
  EXPECT_EQ(marginals(greedy_mu(weights({4, 0, 2})), 3), weights({4, 0, 2}));
}

TEST(Greedy, ModularValue) {
  EXPECT_EQ(greedy_value(cardinality(4), weights({1, 1, 1, 1})), Rational(4));
  EXPECT_THROW(greedy_value(SetFunctionOracle({"x", "y"}, [](ElementMask b) { return Rational(std::popcount(b) * std::popcount(b)); }),
                            weights({1, 1})),
               DomainError);
}

TEST(Greedy, MatchesBruteForceCoverLp) {
  std::mt19937_64 rng(67);
  for (int t = 0; t < 40; ++t) {
    const std::size_t k = 1 + t % 4;
    const SetFunctionOracle f = testing::random_submodular(rng, k);
    std::vector<Rational> w;
    for (std::size_t s = 0; s < k; ++s) w.emplace_back(static_cast<long>(rng() % 4));
    EXPECT_EQ(greedy_value(f, w), testing::brute_force_cover_optimum(f, w)) << "trial " << t;
  }
}

TEST(Greedy, LaminateExamples) {
  const SetFunctionOracle f = cardinality(3);
  // {x,y} and {y,z} cross.
  const CoverMeasure crossed{{0b011, Rational(1)}, {0b110, Rational(2)}};
  const CoverMeasure out = laminate(f, crossed);
  EXPECT_EQ(out, (CoverMeasure{{0b010, Rational(1)}, {0b110, Rational(1)}, {0b111, Rational(1)}}));
  const CoverMeasure chain{{0b001, Rational(1)}, {0b011, Rational(2)}};
  EXPECT_EQ(laminate(f, chain), chain);
  EXPECT_THROW(laminate(f, CoverMeasure{{0b001, Rational(-1)}}), InputError);
}

TEST(Greedy, LaminatePreservesMarginalsAndNeverIncreases) {
  std::mt19937_64 rng(71);
  for (int t = 0; t < 40; ++t) {
    const std::size_t k = 2 + t % 3;
    const SetFunctionOracle f = testing::random_submodular(rng, k);
    const CoverMeasure mu = testing::random_measure(rng, k, 1 + t % 6);
    const CoverMeasure out = laminate(f, mu);
    EXPECT_EQ(marginals(out, k), marginals(mu, k));
    EXPECT_LE(objective(f, out), objective(f, mu));
    for (const auto& [a, x] : out) {
      EXPECT_GT(x, 0);
      for (const auto& [b, y] : out) EXPECT_FALSE(a != b && crosses(a, b));
    }
  }
}

TEST(Greedy, ModularConstancy) {
  EXPECT_TRUE(modular_constancy_check(cardinality(4), weights({3, 1, 2, 2}), 30));
  // Entropy of independent variables with ranks h_s is modular.
  const std::vector<long> ranks{2, 1, 3};
  const SetFunctionOracle indep({"x", "y", "z"}, [ranks](ElementMask b) {
    Rational sum = 0;
    for (std::size_t s = 0; s < ranks.size(); ++s) {
      if (b >> s & 1U) sum += ranks[s];
    }
    return sum;
  });
  EXPECT_TRUE(modular_constancy_check(indep, weights({1, 2, 3}), 30));
  const SetFunctionOracle strict({"x", "y"}, [](ElementMask b) { return Rational(b == 0 ? 0 : 1); });
  EXPECT_THROW(modular_constancy_check(strict, weights({1, 1}), 5), DomainError);
}

TEST(Greedy, CrossingWeights) {
  const auto tri = testing::triangle_pin();
  const CrossingWeights cw = crossing_weights(tri, singletons(tri.all()));
  EXPECT_EQ(cw.labels(), (std::vector<std::string>{"0", "e:a", "e:b", "e:c", "v:1", "v:2", "v:3"}));
  EXPECT_EQ(cw.weights, weights({3, 2, 2, 2, 1, 1, 1}));
  const auto hyp = testing::hyperedge_example();
  const CrossingWeights hw = crossing_weights(hyp, singletons(hyp.all()));
  EXPECT_EQ(hw.labels()[1], "e:c");
  EXPECT_EQ(hw.weights[1], Rational(3));
}

// The triangle instantiation: Y_0 = (F, K), Y_e = the edge bits, no private
// randomness. f(B) = H(Y_B) is the GF(2) rank of the linear forms involved,
// evaluated on the blocklength-2 tree-packing protocol.
TEST(Greedy, TriangleEntropyInstantiation) {
  const auto tri = testing::triangle_pin();
  const LinearProtocol protocol = build_tree_protocol(tri, max_packing(tri).packing, 2);
  const CrossingWeights cw = crossing_weights(tri, singletons(tri.all()));
  std::vector<std::vector<gf2::BitVector>> forms;
  for (const auto& e : cw.elements) {
    std::vector<gf2::BitVector> y;
    if (e.kind == CrossingWeights::Kind::kRoot) {
      for (const auto& msg : protocol.messages) y.push_back(msg.form);
      for (const auto& k : protocol.key) y.push_back(k);
    } else if (e.kind == CrossingWeights::Kind::kEdge) {
      for (std::size_t b = 0; b < 2; ++b) y.push_back(protocol.bit(e.id, b));
    }
    forms.push_back(std::move(y));
  }
  const SetFunctionOracle f(cw.labels(), [forms](ElementMask b) {
    std::vector<gf2::BitVector> all;
    for (std::size_t s = 0; s < forms.size(); ++s) {
      if (b >> s & 1U) all.insert(all.end(), forms[s].begin(), forms[s].end());
    }
    return Rational(static_cast<long>(gf2::rank(all)));
  });
  ASSERT_TRUE(is_submodular(f));

  const CoverMeasure mu = greedy_mu(cw.weights);
  EXPECT_EQ(mu, (CoverMeasure{{0b0000001, Rational(1)}, {0b0001111, Rational(1)}, {0b1111111, Rational(1)}}));
  const Rational value = greedy_value(f, cw.weights);
  EXPECT_EQ(value, testing::brute_force_cover_optimum(f, cw.weights));
  // H(F,K) + H(F,K,X_E) + H(F,K,X_E,U_V) with H(F,K) = 6 bits and H(X_E) = 6.
  EXPECT_EQ(value, Rational(6 + 6 + 6));

  // The sum over blocks C of H(Y_0, U_C, X_{E_C}) is bounded below by it.
  Rational blocks = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    ElementMask b = 1;
    for (std::size_t e = 0; e < 3; ++e) {
      if (tri.edges()[e].on >> i & 1U) b |= ElementMask{1} << (1 + e);
    }
    b |= ElementMask{1} << (4 + i);
    blocks += f(b);
  }
  EXPECT_GE(blocks, value);
}

}  // namespace
}  // namespace skrates
