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

#include "tuttehopf/matroid.hpp"

#include <random>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "test_support.hpp"
#include "tuttehopf/verify.hpp"

namespace tuttehopf {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;
using testing::graph_rank;
using testing::random_graph;
using testing::random_matroid;

const std::vector<std::pair<int, int>> kTriangle = {{0, 1}, {1, 2}, {0, 2}};

TEST(FromBasesTest, RankOneUniform) {
  const Matroid m = Matroid::from_bases(
      2, {GroundSubset::of({0}), GroundSubset::of({1})});
  EXPECT_EQ(m, Matroid::uniform(1, 2));
}

TEST(FromBasesTest, UnequalCardinalityIsRejected) {
  try {
    Matroid::from_bases(2, {GroundSubset::of({0}), GroundSubset::of({0, 1})});
    FAIL() << "expected MatroidError";
  } catch (const MatroidError& e) {
    EXPECT_THAT(e.what(), HasSubstr("unequal cardinality"));
  }
}

TEST(FromBasesTest, ExchangeHolds) {
  const Matroid m = Matroid::from_bases(
      3, {GroundSubset::of({0, 1}), GroundSubset::of({0, 2})});
  EXPECT_EQ(m.rank(), 2);
  EXPECT_EQ(m.element_kind(0), ElementKind::Coloop);
}

TEST(FromBasesTest, ExchangeViolationNamesWitness) {
  try {
    Matroid::from_bases(
        4, {GroundSubset::of({0, 1}), GroundSubset::of({2, 3})});
    FAIL() << "expected MatroidError";
  } catch (const MatroidError& e) {
    EXPECT_THAT(e.what(), HasSubstr("basis-exchange"));
  }
}

TEST(FromBasesTest, EmptyFamilyIsRejected) {
  EXPECT_THROW(Matroid::from_bases(2, {}), MatroidError);
}

TEST(FromBasesTest, BasisOutsideGroundIsRejected) {
  EXPECT_THROW(Matroid::from_bases(2, {GroundSubset::of({2})}), MatroidError);
}

TEST(UniformTest, SmallCases) {
  const Matroid loop = Matroid::uniform(0, 1);
  EXPECT_THAT(loop.bases(), ElementsAre(GroundSubset()));
  EXPECT_EQ(loop.element_kind(0), ElementKind::Loop);
  const Matroid coloop = Matroid::uniform(1, 1);
  EXPECT_THAT(coloop.bases(), ElementsAre(GroundSubset::of({0})));
  EXPECT_EQ(coloop.element_kind(0), ElementKind::Coloop);
  EXPECT_EQ(Matroid::uniform(2, 4).bases().size(), 6u);
}

TEST(UniformTest, RankAboveSizeIsRejected) {
  EXPECT_THROW(Matroid::uniform(3, 2), MatroidError);
}

TEST(GraphicTest, TriangleIsU23) {
  EXPECT_EQ(Matroid::graphic(3, kTriangle), Matroid::uniform(2, 3));
}

TEST(GraphicTest, SelfLoopAndBridge) {
  EXPECT_EQ(Matroid::graphic(1, {{0, 0}}), Matroid::uniform(0, 1));
  EXPECT_EQ(Matroid::graphic(2, {{0, 1}}), Matroid::uniform(1, 1));
}

TEST(GraphicTest, CycleIsUniform) {
  for (int n = 1; n <= 8; ++n) {
    std::vector<std::pair<int, int>> cycle;
    for (int i = 0; i < n; ++i) cycle.emplace_back(i, (i + 1) % n);
    EXPECT_EQ(Matroid::graphic(n, cycle), Matroid::uniform(n - 1, n)) << n;
  }
}

TEST(GraphicTest, RankMatchesUnionFindOracle) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = random_graph(rng, 6, 9);
    const Matroid m = Matroid::graphic(g.vertices, g.edges);
    const std::uint64_t total = std::uint64_t{1} << g.edges.size();
    for (std::uint64_t a = 0; a < total; ++a) {
      ASSERT_EQ(m.rank(GroundSubset(a)), graph_rank(g.vertices, g.edges, a));
    }
  }
}

TEST(RankTest, Examples) {
  EXPECT_EQ(Matroid::uniform(2, 4).rank(GroundSubset::of({0, 1, 2})), 2);
  const Matroid c3 = Matroid::graphic(3, kTriangle);
  EXPECT_EQ(c3.rank(c3.ground()), 2);
  EXPECT_EQ(c3.rank(GroundSubset()), 0);
  EXPECT_EQ(Matroid::uniform(0, 1).nullity(GroundSubset::of({0})), 1);
  EXPECT_EQ(Matroid::uniform(1, 1).nullity(GroundSubset::of({0})), 0);
  EXPECT_EQ(c3.nullity(c3.ground()), 1);
}

TEST(ElementKindTest, U12IsNonseparating) {
  const Matroid m = Matroid::uniform(1, 2);
  EXPECT_EQ(m.element_kind(0), ElementKind::Nonseparating);
  EXPECT_EQ(m.element_kind(1), ElementKind::Nonseparating);
}

TEST(MinorTest, RestrictU24) {
  const Matroid r = restrict(Matroid::uniform(2, 4), GroundSubset::of({0, 1}));
  EXPECT_EQ(r.ground(), GroundSubset::of({0, 1}));
  EXPECT_THAT(r.bases(), ElementsAre(GroundSubset::of({0, 1})));
}

TEST(MinorTest, EmptyMinorsAreIdentity) {
  const Matroid k4 = Matroid::graphic(
      4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(delete_elements(k4, GroundSubset()), k4);
  EXPECT_EQ(contract(k4, GroundSubset()), k4);
}

TEST(MinorTest, ContractKeepsLabels) {
  const Matroid c = contract(Matroid::uniform(1, 2), GroundSubset::of({0}));
  EXPECT_EQ(c.ground(), GroundSubset::of({1}));
  EXPECT_EQ(c.element_kind(1), ElementKind::Loop);
  EXPECT_EQ(contract(Matroid::uniform(1, 1), GroundSubset::of({0})),
            Matroid::empty());
}

TEST(MinorTest, NestedMinorsComposeOnTheNose) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const Matroid m = random_matroid(rng, 8);
    std::uniform_int_distribution<std::uint64_t> sub(
        0, (std::uint64_t{1} << m.size()) - 1);
    const GroundSubset a = m.expand(sub(rng));
    const GroundSubset b = m.expand(sub(rng));
    ASSERT_EQ(restrict(restrict(m, a), a & b), restrict(m, a & b));
    ASSERT_EQ(contract(contract(m, a), b - a), contract(m, a | b));
  }
}

TEST(DualTest, Examples) {
  EXPECT_EQ(dual(Matroid::uniform(1, 1)), Matroid::uniform(0, 1));
  EXPECT_EQ(dual(Matroid::uniform(2, 4)), Matroid::uniform(2, 4));
  EXPECT_EQ(dual(Matroid::uniform(0, 1)), Matroid::uniform(1, 1));
}

TEST(DirectSumTest, Examples) {
  const Matroid s =
      direct_sum(Matroid::uniform(1, 1), Matroid::uniform(0, 1));
  EXPECT_EQ(s.size(), 2);
  EXPECT_THAT(s.bases(), ElementsAre(GroundSubset::of({0})));
  const Matroid c3 = Matroid::graphic(3, kTriangle);
  EXPECT_EQ(direct_sum(c3, Matroid::empty()), c3);
}

TEST(CircuitsTest, Examples) {
  EXPECT_THAT(circuits(Matroid::uniform(0, 1)),
              ElementsAre(GroundSubset::of({0})));
  EXPECT_TRUE(circuits(Matroid::uniform(1, 1)).empty());
  EXPECT_THAT(circuits(Matroid::uniform(2, 3)),
              ElementsAre(GroundSubset::of({0, 1, 2})));
}

TEST(CapTest, RankTableAboveCapThrows) {
  EXPECT_THROW(Matroid::uniform(1, 30).rank_table(), SizeCapError);
  EXPECT_THROW(Matroid::uniform(1, 64), MatroidError);
}

// Every matroid-layer identity on random matroids, including minors of
// duals of direct sums that the fixed corpus does not reach.
TEST(MatroidPropertyTest, LayerIdentitiesOnRandomMatroids) {
  std::mt19937_64 rng(20261019);
  for (int trial = 0; trial < 150; ++trial) {
    const Matroid m = random_matroid(rng, 8);
    SCOPED_TRACE(to_string(m));
    ASSERT_TRUE(checks::rank_axioms(m));
    ASSERT_TRUE(checks::basis_exchange(m));
    ASSERT_TRUE(checks::backend_agreement(m));
    ASSERT_TRUE(checks::restrict_is_delete_complement(m));
    ASSERT_TRUE(checks::coloop_contract_is_delete(m));
    ASSERT_TRUE(checks::contraction_rank(m));
    ASSERT_TRUE(checks::rank_additivity(m));
    ASSERT_TRUE(checks::dual_involution(m));
    ASSERT_TRUE(checks::contract_is_dual_delete_dual(m));
    ASSERT_TRUE(checks::loops_are_singleton_circuits(m));
  }
}

// Independent-set counts against the definition, on graphs.
TEST(MatroidPropertyTest, IndependentCountMatchesForestCount) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = random_graph(rng, 6, 8);
    const Matroid m = Matroid::graphic(g.vertices, g.edges);
    const std::uint64_t total = std::uint64_t{1} << g.edges.size();
    std::uint64_t forests = 0;
    for (std::uint64_t a = 0; a < total; ++a) {
      if (graph_rank(g.vertices, g.edges, a) == std::popcount(a)) ++forests;
    }
    ASSERT_EQ(count_independent(m), forests);
  }
}

}  // namespace
}  // namespace tuttehopf
