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

#include "tuttehopf/tutte.hpp"

#include <algorithm>
#include <random>

#include "gtest/gtest.h"
#include "test_support.hpp"
#include "tuttehopf/corpus.hpp"
#include "tuttehopf/verify.hpp"

namespace tuttehopf {
namespace {

using namespace vars;
using testing::brute_force_tutte;
using testing::graph_rank;
using testing::random_graph;
using testing::random_matroid;
using testing::to_multipoly;

const std::vector<std::pair<int, int>> kK4 = {{0, 1}, {0, 2}, {0, 3},
                                              {1, 2}, {1, 3}, {2, 3}};

// Subset-sum oracle for U(r, n), with rank min(|A|, r).
MultiPoly uniform_oracle(int r, int n) {
  return to_multipoly(brute_force_tutte(
      n, [r](std::uint64_t a) { return std::min(std::popcount(a), r); }));
}

TEST(TutteRankSumTest, SingleElement) {
  EXPECT_EQ(tutte_rank_sum(Matroid::uniform(1, 1)), x());
  EXPECT_EQ(tutte_rank_sum(Matroid::uniform(0, 1)), y());
  EXPECT_EQ(tutte_rank_sum(Matroid::empty()), MultiPoly(1));
}

// Frozen from uniform_oracle(2, 3) and uniform_oracle(2, 4).
TEST(TutteRankSumTest, FrozenUniformValues) {
  EXPECT_EQ(uniform_oracle(2, 3), x() * x() + x() + y());
  EXPECT_EQ(uniform_oracle(2, 4), x() * x() + 2 * x() + 2 * y() + y() * y());
  EXPECT_EQ(tutte_rank_sum(Matroid::uniform(2, 3)), x() * x() + x() + y());
  EXPECT_EQ(tutte_rank_sum(Matroid::uniform(2, 4)),
            x() * x() + 2 * x() + 2 * y() + y() * y());
}

// 16 spanning trees: the acyclic 3-edge subsets of K4, counted with a
// standalone union-find.
TEST(TutteRankSumTest, K4SpanningTrees) {
  int trees = 0;
  for (std::uint64_t a = 0; a < 64; ++a) {
    if (std::popcount(a) == 3 && graph_rank(4, kK4, a) == 3) ++trees;
  }
  ASSERT_EQ(trees, 16);
  const MultiPoly t = tutte_rank_sum(Matroid::graphic(4, kK4));
  EXPECT_EQ(eval(t, {{Var::x, 1}, {Var::y, 1}}), MultiPoly(16));
}

TEST(TutteRankSumTest, UniformMatchesSubsetSumOracle) {
  for (int n = 0; n <= 9; ++n) {
    for (int r = 0; r <= n; ++r) {
      ASSERT_EQ(tutte_rank_sum(Matroid::uniform(r, n)), uniform_oracle(r, n))
          << r << "," << n;
    }
  }
}

TEST(TutteRankSumTest, GraphicMatchesSubsetSumOracle) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 80; ++trial) {
    const auto g = random_graph(rng, 6, 9);
    const MultiPoly expected = to_multipoly(brute_force_tutte(
        static_cast<int>(g.edges.size()), [&](std::uint64_t a) {
          return graph_rank(g.vertices, g.edges, a);
        }));
    ASSERT_EQ(tutte_rank_sum(Matroid::graphic(g.vertices, g.edges)), expected);
  }
}

TEST(TutteRankSumTest, CapIsEnforced) {
  EXPECT_THROW(tutte_rank_sum(Matroid::uniform(1, kTutteCap + 1)),
               SizeCapError);
}

TEST(QUniversalTest, Examples) {
  EXPECT_EQ(q_universal(Matroid::uniform(1, 2)), a() * x() + b() * y());
  EXPECT_EQ(q_universal(Matroid::uniform(1, 1)), x());
  EXPECT_EQ(q_universal(Matroid::empty()), MultiPoly(1));
}

TEST(QUniversalTest, SmallestNonseparatingSelector) {
  EXPECT_EQ(smallest_nonseparating(Matroid::uniform(1, 2)), 0);
  EXPECT_EQ(smallest_nonseparating(
                direct_sum(Matroid::uniform(1, 1), Matroid::uniform(0, 1))),
            std::nullopt);
}

TEST(RecipeClosedFormTest, Examples) {
  EXPECT_EQ(recipe_closed_form(Matroid::uniform(1, 2)), a() * x() + b() * y());
  EXPECT_EQ(recipe_closed_form(Matroid::uniform(1, 1)), x());
  EXPECT_EQ(recipe_closed_form(Matroid::uniform(0, 1)), y());
}

TEST(CheckDualityTest, Examples) {
  EXPECT_TRUE(check_duality(Matroid::uniform(1, 1)));
  EXPECT_TRUE(check_duality(Matroid::uniform(2, 4)));
  EXPECT_TRUE(check_duality(Matroid::graphic(4, kK4)));
}

TEST(CheckConvolutionTest, Examples) {
  EXPECT_TRUE(check_convolution(Matroid::uniform(1, 1)));
  EXPECT_TRUE(check_convolution(Matroid::uniform(2, 3)));
  EXPECT_TRUE(check_convolution(Matroid::graphic(4, kK4)));
}

TEST(TuttePropertyTest, IdentitiesOnRandomMatroids) {
  std::mt19937_64 rng(20261019);
  for (int trial = 0; trial < 120; ++trial) {
    const Matroid m = random_matroid(rng, 9);
    SCOPED_TRACE(to_string(m));
    ASSERT_TRUE(checks::tutte_cross_algorithm(m));
    ASSERT_TRUE(checks::recipe_theorem(m));
    ASSERT_TRUE(checks::recipe_rational_substitution(m));
    ASSERT_TRUE(checks::selection_rule_independence(m));
    ASSERT_TRUE(checks::tutte_evaluations(m));
    ASSERT_TRUE(check_duality(m));
  }
}

TEST(TuttePropertyTest, NonNegativeCoefficients) {
  for (const CorpusCase& c : build_corpus(10)) {
    const MultiPoly t = tutte_rank_sum(c.matroid);
    for (const auto& [mono, coef] : t.terms()) {
      ASSERT_GT(coef, 0) << c.name;
    }
  }
}

TEST(TuttePropertyTest, MultiplicativeOnRandomPairs) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    const Matroid m1 = random_matroid(rng, 5);
    const Matroid m2 = random_matroid(rng, 5);
    ASSERT_TRUE(checks::tutte_multiplicative(m1, m2));
    ASSERT_EQ(q_universal(direct_sum(m1, m2)),
              q_universal(m1) * q_universal(m2));
  }
}

TEST(TuttePropertyTest, ConvolutionFormulaOnRandomMatroids) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const Matroid m = random_matroid(rng, 7);
    ASSERT_TRUE(check_convolution(m)) << to_string(m);
  }
}

}  // namespace
}  // namespace tuttehopf
