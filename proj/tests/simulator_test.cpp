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

#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "support.hpp"

namespace {

using namespace rvcloud;

sim::ScenarioSpec spec(std::size_t tenants, std::uint64_t seed) {
  sim::ScenarioSpec s;
  s.tenants = tenants;
  s.rvcs = 2;
  s.variants_per_rvc = 3;
  s.functionality_count = 6;
  s.seed = seed;
  return s;
}

TEST(Generate, SameSeedSameBundle) {
  sim::ScenarioSpec s = spec(12, 0);
  s.strictness = {0.25, 0.25, 0.25, 0.25};
  EXPECT_EQ(io::serialize_bundle(sim::generate(s)), io::serialize_bundle(sim::generate(s)));
  sim::ScenarioSpec other = s;
  other.seed = 1;
  EXPECT_NE(io::serialize_bundle(sim::generate(s)), io::serialize_bundle(sim::generate(other)));
}

TEST(Generate, ShareAnyGivesOneInstancePerRvc) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    sim::ScenarioSpec s = spec(15, seed);
    s.selection_density = 1.0;
    const ApplicationPlan p = plan(sim::generate(s)).front();
    for (const auto& r : p.rvcs) EXPECT_EQ(r.coloring.instance_count(), 1u) << seed;
    EXPECT_EQ(p.summary.instances, s.rvcs);
  }
}

TEST(Generate, DontShareAnyGivesOneInstancePerTenant) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    sim::ScenarioSpec s = spec(9, seed);
    s.selection_density = 1.0;
    s.strictness = {0.0, 0.0, 0.0, 1.0};
    const ApplicationPlan p = plan(sim::generate(s)).front();
    for (const auto& r : p.rvcs) {
      EXPECT_EQ(r.coloring.instance_count(), r.participating_tenants()) << seed;
      EXPECT_EQ(r.participating_tenants(), s.tenants);
    }
  }
}

TEST(Generate, AlwaysValidatorClean) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    sim::ScenarioSpec s;
    s.seed = seed;
    s.tenants = 1 + seed % 17;
    s.rvcs = 1 + seed % 4;
    s.variants_per_rvc = 1 + (seed / 4) % 4;
    s.functionality_count = 1 + (seed / 3) % 7;
    s.selection_density = (seed % 11) / 10.0;
    s.partner_density = (seed % 5) / 10.0;
    s.competitor_density = (seed % 7) / 10.0;
    s.strictness = {0.25, 0.25, 0.25, 0.25};
    const ValidationReport r = validate_bundle(sim::generate(s));
    ASSERT_TRUE(r.errors.empty()) << seed << ": " << r.errors.front().path << " " << r.errors.front().message;
    ASSERT_TRUE(r.warnings.empty()) << seed << ": " << r.warnings.front().message;
  }
}

TEST(Generate, EndToEndDeterministic) {
  sim::ScenarioSpec s = spec(10, 42);
  s.strictness = {0.3, 0.3, 0.2, 0.2};
  EXPECT_EQ(render_plans(plan(sim::generate(s)), ReportFormat::json),
            render_plans(plan(sim::generate(s)), ReportFormat::json));
}

TEST(ScenarioSpec, Validation) {
  sim::ScenarioSpec s;
  EXPECT_NO_THROW(s.validate());
  s.tenants = 0;
  EXPECT_THROW(s.validate(), UsageError);
  s = {};
  s.strictness = {0.5, 0.0, 0.0, 0.0};
  EXPECT_THROW(s.validate(), UsageError);
  s = {};
  s.selection_density = 1.5;
  EXPECT_THROW(s.validate(), UsageError);
  s = {};
  s.partner_density = 0.7;
  s.competitor_density = 0.7;
  EXPECT_THROW(s.validate(), UsageError);
}

TEST(ScenarioSpec, JsonRoundTrip) {
  sim::ScenarioSpec s = spec(7, 99);
  s.strictness = {0.1, 0.2, 0.3, 0.4};
  const auto j = sim::scenario_to_json(s);
  const sim::ScenarioSpec back = sim::scenario_from_json(nlohmann::json::parse(j.dump()));
  EXPECT_EQ(sim::scenario_to_json(back), j);
  EXPECT_THROW(sim::scenario_from_json(nlohmann::json::parse(R"({"strictness": {"Maybe": 1}})")), UsageError);
  EXPECT_THROW(sim::scenario_from_json(nlohmann::json::parse(R"({"tenants": "many"})")), UsageError);
}

TEST(Sweep, SmallSpecsAreAudited) {
  std::vector<sim::ScenarioSpec> specs;
  for (std::uint64_t i = 0; i < 10; ++i) {
    sim::ScenarioSpec s = spec(1 + i, i);
    s.strictness = {0.4, 0.2, 0.2, 0.2};
    specs.push_back(s);
  }
  for (const auto& row : sim::sweep(specs)) {
    ASSERT_TRUE(row.d_exact.has_value());
    ASSERT_TRUE(row.gap.has_value());
    EXPECT_GE(*row.gap, 0);
    EXPECT_EQ(static_cast<std::int64_t>(row.d_greedy) - static_cast<std::int64_t>(*row.d_exact), *row.gap);
  }
}

TEST(Sweep, LargeSpecHasNoExactCount) {
  sim::ScenarioSpec s;
  s.tenants = 2000;
  s.rvcs = 2;
  s.variants_per_rvc = 3;
  s.functionality_count = 6;
  s.partner_density = 0.001;
  s.competitor_density = 0.001;
  s.strictness = {0.7, 0.1, 0.1, 0.1};
  const auto rows = sim::sweep({s});
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_FALSE(rows[0].d_exact.has_value());
  EXPECT_FALSE(rows[0].gap.has_value());
  EXPECT_GE(rows[0].d_greedy, 1u);
  const std::string csv = sim::to_csv(rows);
  EXPECT_EQ(csv.rfind(std::string(sim::kCsvHeader) + "\n", 0), 0u);
  EXPECT_NE(csv.find(",2000,2,3,0.1," + std::to_string(rows[0].d_greedy) + ",,,"), std::string::npos) << csv;
}

// Raising the DSWAny weight on a fixed seed only turns SWAny cells into
// DSWAny cells, so the exact count can only grow.
TEST(Sweep, DontShareAnyWeightIsMonotone) {
  const std::vector<double> weights{0.0, 0.25, 0.5, 0.75, 1.0};
  std::vector<double> mean(weights.size(), 0.0);
  const int seeds = 40;
  for (int seed = 0; seed < seeds; ++seed) {
    std::vector<sim::ScenarioSpec> specs;
    for (double w : weights) {
      sim::ScenarioSpec s = spec(8, static_cast<std::uint64_t>(seed));
      s.strictness = {1.0 - w, 0.0, 0.0, w};
      specs.push_back(s);
    }
    const auto rows = sim::sweep(specs);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      ASSERT_TRUE(rows[i].d_exact.has_value());
      mean[i] += static_cast<double>(*rows[i].d_exact) / seeds;
      if (i > 0) {
        ASSERT_GE(*rows[i].d_exact, *rows[i - 1].d_exact) << "seed " << seed << " w " << weights[i];
      }
    }
  }
  for (std::size_t i = 1; i < mean.size(); ++i) EXPECT_GE(mean[i], mean[i - 1]);
  EXPECT_GT(mean.back(), mean.front());
}

}  // namespace
