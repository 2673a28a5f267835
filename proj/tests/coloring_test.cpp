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

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "support.hpp"

namespace {

using namespace rvcloud;
using rvtest::GraphSpec;
using rvtest::make_graph;

Usage u(const char* t, const char* v) { return {TenantId(t), VariantId(v)}; }

std::vector<std::vector<Usage>> classes_of(const RvcColoring& c) {
  std::vector<std::vector<Usage>> out;
  for (const auto& k : c.classes) out.push_back(k.members);
  return out;
}

// Two tenants, variants {A,B}, one conflict edge {T1,T2} labeled A.
LabeledGraph two_tenant_trace() {
  LabeledGraph g(RvcId("R"), rvtest::tenant_ids({"T1", "T2"}), rvtest::variant_ids({"A", "B"}));
  for (const char* t : {"T1", "T2"})
    for (const char* v : {"A", "B"}) g.add_participant(TenantId(t), VariantId(v));
  g.add_edge(TenantId("T1"), TenantId("T2"), VariantId("A"));
  return g;
}

TEST(GreedyColor, NoConflicts) {
  const RvcColoring c = greedy_color(make_graph({3, 1, {{0, 1, 2}}, {}}));
  EXPECT_EQ(c.instance_count(), 1u);
  EXPECT_EQ(classes_of(c), (std::vector<std::vector<Usage>>{{u("T1", "V1"), u("T2", "V1"), u("T3", "V1")}}));
}

TEST(GreedyColor, Triangle) {
  const RvcColoring c = greedy_color(make_graph({3, 1, {{0, 1, 2}}, {{0, 1, 0}, {0, 2, 0}, {1, 2, 0}}}));
  EXPECT_EQ(classes_of(c), (std::vector<std::vector<Usage>>{{u("T1", "V1")}, {u("T2", "V1")}, {u("T3", "V1")}}));
}

TEST(GreedyColor, TwoTenantTrace) {
  const LabeledGraph g = two_tenant_trace();
  const RvcColoring c = greedy_color(g);
  EXPECT_EQ(classes_of(c),
            (std::vector<std::vector<Usage>>{{u("T1", "A"), u("T1", "B"), u("T2", "B")}, {u("T2", "A")}}));
  EXPECT_EQ(c.assignment.at(u("T2", "A")), 2u);
  EXPECT_TRUE(check_validity(c, g).empty());
  EXPECT_EQ(rvtest::oracle_min_shared(g), 2u);
  EXPECT_EQ(exact_min_color(g, PoolMode::shared_pool).instance_count(), 2u);
}

TEST(GreedyColor, Path) {
  const LabeledGraph g = make_graph({3, 1, {{0, 1, 2}}, {{0, 1, 0}, {1, 2, 0}}});
  const RvcColoring c = greedy_color(g);
  EXPECT_EQ(classes_of(c), (std::vector<std::vector<Usage>>{{u("T1", "V1"), u("T3", "V1")}, {u("T2", "V1")}}));
  EXPECT_EQ(rvtest::oracle_chromatic(g, 0), 2u);
}

TEST(GreedyColor, FollowsTheGivenOrder) {
  const LabeledGraph g = make_graph({3, 1, {{0, 1, 2}}, {{0, 1, 0}, {1, 2, 0}}});
  const RvcColoring c = greedy_color(g, rvtest::tenant_ids({"T2", "T1", "T3"}), rvtest::variant_ids({"V1"}));
  EXPECT_EQ(classes_of(c), (std::vector<std::vector<Usage>>{{u("T2", "V1")}, {u("T1", "V1"), u("T3", "V1")}}));
  EXPECT_TRUE(check_validity(c, g).empty());
}

TEST(GreedyColor, NonParticipantsAreSkipped) {
  const LabeledGraph g = make_graph({3, 1, {{1, 2}}, {{1, 2, 0}}});
  const RvcColoring c = greedy_color(g);
  EXPECT_EQ(c.tenant_order, rvtest::tenant_ids({"T2", "T3"}));
  EXPECT_EQ(classes_of(c), (std::vector<std::vector<Usage>>{{u("T2", "V1")}, {u("T3", "V1")}}));
}

TEST(GreedyColor, BadOrdersAreUsageErrors) {
  const LabeledGraph g = two_tenant_trace();
  const auto vs = rvtest::variant_ids({"A", "B"});
  EXPECT_THROW(greedy_color(g, rvtest::tenant_ids({"T1"}), vs), UsageError);
  EXPECT_THROW(greedy_color(g, rvtest::tenant_ids({"T1", "T1", "T2"}), vs), UsageError);
  EXPECT_THROW(greedy_color(g, rvtest::tenant_ids({"T1", "T9"}), vs), UsageError);
  EXPECT_THROW(greedy_color(g, rvtest::tenant_ids({"T1", "T2"}), rvtest::variant_ids({"A"})), UsageError);
}

TEST(PerVariantColor, TwoTenantTrace) {
  const RvcColoring c = per_variant_color(two_tenant_trace());
  EXPECT_EQ(c.instance_count(), 3u);
  EXPECT_EQ(c.per_variant_counts(), (std::map<VariantId, std::size_t>{{VariantId("A"), 2}, {VariantId("B"), 1}}));
  EXPECT_EQ(c.assignment.at(u("T1", "A")), 1u);
  EXPECT_EQ(c.assignment.at(u("T2", "A")), 2u);
  EXPECT_EQ(c.assignment.at(u("T2", "B")), 1u);
  ASSERT_NE(c.find_class(2, VariantId("A")), nullptr);
  EXPECT_EQ(c.find_class(2, VariantId("B")), nullptr);
}

TEST(PerVariantColor, EmptyGraphTwoVariants) {
  const RvcColoring c = per_variant_color(make_graph({3, 2, {{0, 1, 2}, {0, 1, 2}}, {}}));
  EXPECT_EQ(c.instance_count(), 2u);
}

TEST(PerVariantColor, CompleteOnEveryVariant) {
  for (std::size_t m : {1u, 3u, 5u})
    for (std::size_t n : {1u, 2u, 4u}) {
      GraphSpec s{m, n, std::vector<std::vector<std::size_t>>(n), {}};
      for (std::size_t v = 0; v < n; ++v)
        for (std::size_t a = 0; a < m; ++a) {
          s.participation[v].push_back(a);
          for (std::size_t b = a + 1; b < m; ++b) s.edges.emplace_back(a, b, v);
        }
      EXPECT_EQ(per_variant_color(make_graph(s)).instance_count(), m * n);
      EXPECT_EQ(greedy_color(make_graph(s)).instance_count(), m);
    }
}

TEST(CheckValidity, ReportsExactlyTheCorruptedAssignment) {
  const LabeledGraph g = make_graph({3, 1, {{0, 1, 2}}, {{0, 1, 0}, {1, 2, 0}}});
  RvcColoring c = greedy_color(g);
  // Move T3 from C1 next to its neighbor T2 in C2.
  c.assignment[u("T3", "V1")] = 2;
  c.classes[0].members = {u("T1", "V1")};
  c.classes[1].members = {u("T2", "V1"), u("T3", "V1")};
  const auto v = check_validity(c, g);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, Violation::Kind::conflict);
  EXPECT_EQ(v[0].tenant, TenantId("T3"));
  EXPECT_EQ(v[0].variant, VariantId("V1"));
  EXPECT_EQ(v[0].class_index, 2u);
}

TEST(CheckValidity, MissingCellIsACoverageViolation) {
  const LabeledGraph g = two_tenant_trace();
  RvcColoring c = greedy_color(g);
  c.assignment.erase(u("T2", "B"));
  c.classes[0].members.pop_back();
  const auto v = check_validity(c, g);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, Violation::Kind::missing);
  EXPECT_EQ(v[0].tenant, TenantId("T2"));
  EXPECT_EQ(v[0].variant, VariantId("B"));
}

TEST(CheckValidity, PerVariantClassesAreCheckedWithinTheVariant) {
  const LabeledGraph g = two_tenant_trace();
  RvcColoring c = per_variant_color(g);
  c.assignment[u("T2", "A")] = 1;
  c.classes[0].members.push_back(u("T2", "A"));
  c.classes.erase(c.classes.begin() + 1);
  const auto v = check_validity(c, g);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, Violation::Kind::conflict);
  EXPECT_EQ(v[0].tenant, TenantId("T2"));
}

// Soundness, bounds and determinism over random conflict graphs.
TEST(Coloring, RandomGraphProperties) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 1 + rng() % 50, k = 1 + rng() % 6;
    const LabeledGraph g =
        rvtest::random_graph(rng, n, k, 0.3 + 0.7 * (rng() % 100) / 100.0, (rng() % 100) / 100.0);
    const RvcColoring shared = greedy_color(g);
    const RvcColoring per = per_variant_color(g);
    ASSERT_TRUE(check_validity(shared, g).empty()) << "graph " << i;
    ASSERT_TRUE(check_validity(per, g).empty()) << "graph " << i;
    ASSERT_LE(shared.instance_count(), shared.tenant_order.size());
    const auto counts = per.per_variant_counts();
    for (std::size_t v = 0; v < k; ++v) {
      std::size_t max_deg = 0;
      for (std::size_t t = 0; t < n; ++t) max_deg = std::max(max_deg, g.degree(v, t));
      auto it = counts.find(g.variants()[v]);
      const std::size_t got = it == counts.end() ? 0 : it->second;
      ASSERT_LE(got, 1 + max_deg);
      ASSERT_EQ(got == 0, g.participants(v).none());
    }
    ASSERT_EQ(greedy_color(g), shared);
    ASSERT_EQ(per_variant_color(g), per);
  }
}

// The shared-pool output also satisfies the independently written oracle
// rule on small graphs.
TEST(Coloring, SharedPoolAgreesWithOracleRule) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 500; ++i) {
    const LabeledGraph g = rvtest::random_graph(rng, 1 + rng() % 8, 1 + rng() % 3, 0.6, 0.5);
    const RvcColoring c = greedy_color(g);
    const auto use = rvtest::usages(g);
    std::vector<int> color;
    for (auto [t, v] : use) color.push_back(static_cast<int>(c.assignment.at({g.vertices()[t], g.variants()[v]})));
    ASSERT_TRUE(rvtest::oracle_valid_shared(g, use, color));
  }
}

}  // namespace
