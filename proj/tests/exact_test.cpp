// Copyright 2026 The rvcloud Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "support.hpp"

namespace {

using namespace rvcloud;
using rvtest::GraphSpec;
using rvtest::make_graph;

LabeledGraph cycle(std::size_t n) {
  GraphSpec s{n, 1, {{}}, {}};
  for (std::size_t i = 0; i < n; ++i) {
    s.participation[0].push_back(i);
    s.edges.emplace_back(i, (i + 1) % n, 0);
  }
  return make_graph(s);
}

// K_{n,n} minus a perfect matching, vertices interleaved u1,v1,u2,v2,...
LabeledGraph crown(std::size_t n) {
  GraphSpec s{2 * n, 1, {{}}, {}};
  for (std::size_t i = 0; i < 2 * n; ++i) s.participation[0].push_back(i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) s.edges.emplace_back(2 * i, 2 * j + 1, 0);
  return make_graph(s);
}

TEST(ExactMinColor, FiveCycleNeedsThree) {
  const LabeledGraph g = cycle(5);
  EXPECT_EQ(rvtest::oracle_chromatic(g, 0), 3u);
  const RvcColoring c = exact_min_color(g, PoolMode::shared_pool);
  EXPECT_EQ(c.instance_count(), 3u);
  EXPECT_TRUE(check_validity(c, g).empty());
  EXPECT_EQ(exact_min_color(g, PoolMode::per_variant).instance_count(), 3u);
}

TEST(ExactMinColor, EmptyConflictGraphNeedsOne) {
  const LabeledGraph g = make_graph({4, 2, {{0, 1, 2, 3}, {1, 3}}, {}});
  EXPECT_EQ(exact_min_color(g, PoolMode::shared_pool).instance_count(), 1u);
  EXPECT_EQ(exact_min_color(g, PoolMode::per_variant).instance_count(), 2u);
}

TEST(ExactMinColor, NoParticipantsNoClasses) {
  const LabeledGraph g = make_graph({3, 2, {{}, {}}, {}});
  EXPECT_EQ(exact_min_color(g, PoolMode::shared_pool).instance_count(), 0u);
  EXPECT_EQ(greedy_color(g).instance_count(), 0u);
}

TEST(ExactMinColor, CrownFirstFitGap) {
  for (std::size_t n = 2; n <= 5; ++n) {
    const LabeledGraph g = crown(n);
    EXPECT_EQ(greedy_color(g).instance_count(), n);
    const RvcColoring c = exact_min_color(g, PoolMode::shared_pool);
    EXPECT_EQ(c.instance_count(), 2u);
    EXPECT_TRUE(check_validity(c, g).empty());
    if (n <= 4) {
      EXPECT_EQ(rvtest::oracle_chromatic(g, 0), 2u);
    }
  }
}

TEST(ExactMinColor, TieBreakIsLexicographicallySmallest) {
  // Path T1-T2-T3 and an isolated T4: {T1,T3,T4} / {T2}.
  const LabeledGraph g = make_graph({4, 1, {{0, 1, 2, 3}}, {{0, 1, 0}, {1, 2, 0}}});
  const RvcColoring c = exact_min_color(g, PoolMode::shared_pool);
  ASSERT_EQ(c.instance_count(), 2u);
  EXPECT_EQ(c.classes[0].members.size(), 3u);
  EXPECT_EQ(c.assignment.at({TenantId("T2"), VariantId("V1")}), 2u);
  EXPECT_EQ(c.assignment.at({TenantId("T4"), VariantId("V1")}), 1u);
}

TEST(ExactMinColor, LimitIsEnforced) {
  const LabeledGraph g = cycle(13);
  EXPECT_THROW(exact_min_color(g, PoolMode::shared_pool), InstanceTooLarge);
  EXPECT_EQ(exact_min_color(g, PoolMode::shared_pool, 13).instance_count(), 3u);
  try {
    exact_min_color(cycle(6), PoolMode::per_variant, 5);
    FAIL();
  } catch (const InstanceTooLarge& e) {
    EXPECT_EQ(e.tenants(), 6u);
    EXPECT_EQ(e.limit(), 5u);
  }
}

TEST(ExactMinColor, MatchesEnumerationOracle) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 400; ++i) {
    const LabeledGraph g = rvtest::random_graph(rng, 1 + rng() % 6, 1 + rng() % 2, 0.7, (rng() % 100) / 100.0);
    if (rvtest::usages(g).size() > 9) continue;
    const RvcColoring shared = exact_min_color(g, PoolMode::shared_pool);
    ASSERT_EQ(shared.instance_count(), rvtest::oracle_min_shared(g)) << i;
    ASSERT_TRUE(check_validity(shared, g).empty());
    const RvcColoring per = exact_min_color(g, PoolMode::per_variant);
    ASSERT_EQ(per.instance_count(), rvtest::oracle_min_per_variant(g)) << i;
    ASSERT_TRUE(check_validity(per, g).empty());
  }
}

TEST(ExactMinColor, NeverWorseThanGreedy) {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 500; ++i) {
    const LabeledGraph g = rvtest::random_graph(rng, 1 + rng() % 10, 1 + rng() % 4, 0.7, (rng() % 100) / 100.0);
    for (PoolMode m : {PoolMode::shared_pool, PoolMode::per_variant}) {
      const RvcColoring e = exact_min_color(g, m);
      ASSERT_LE(e.instance_count(), color(g, m).instance_count());
      ASSERT_TRUE(check_validity(e, g).empty());
      ASSERT_EQ(exact_min_color(g, m), e);
    }
  }
}

TEST(ExactMinColor, AddingAConflictNeverHelps) {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 2 + rng() % 8, k = 1 + rng() % 3;
    LabeledGraph g = rvtest::random_graph(rng, n, k, 0.8, (rng() % 80) / 100.0);
    std::size_t before[2] = {exact_min_color(g, PoolMode::shared_pool).instance_count(),
                             exact_min_color(g, PoolMode::per_variant).instance_count()};
    for (int step = 0; step < 4; ++step) {
      const std::size_t v = rng() % k, a = rng() % n, b = rng() % n;
      if (a == b || !g.participants(v).test(a) || !g.participants(v).test(b)) continue;
      g.add_edge(a, b, v);
      const std::size_t after[2] = {exact_min_color(g, PoolMode::shared_pool).instance_count(),
                                    exact_min_color(g, PoolMode::per_variant).instance_count()};
      ASSERT_GE(after[0], before[0]);
      ASSERT_GE(after[1], before[1]);
      before[0] = after[0];
      before[1] = after[1];
    }
  }
}

}  // namespace
