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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rvcloud/coloring.hpp"
#include "rvcloud/distribution.hpp"
#include "rvcloud/errors.hpp"
#include "rvcloud/exact.hpp"
#include "rvcloud/graph.hpp"
#include "rvcloud/model.hpp"
#include "rvcloud/report.hpp"
#include "rvcloud/translate.hpp"

namespace rvcloud {

struct PlanOptions {
  PoolMode mode = PoolMode::shared_pool;
  std::size_t exact_limit = kDefaultExactLimit;  // 0 disables the audit
};

struct RvcPlan {
  VariantRequirementTable table;
  LabeledGraph relationships;
  LabeledGraph conflicts;
  RvcColoring coloring;
  std::optional<RvcColoring> exact;  // set when within the exact limit

  std::size_t participating_tenants() const { return coloring.tenant_order.size(); }
};

struct ApplicationPlan {
  AppId app;
  PlanOptions options;
  FunctionalityRequirementTable functionality_table;
  std::vector<RichVariantConfiguration> configurations;
  std::vector<RvcPlan> rvcs;
  Distribution distribution;
  CostSummary summary;
  Optimality optimality;

  const RvcPlan* find(const RvcId& rvc) const {
    for (const auto& r : rvcs)
      if (r.table.rvc == rvc) return &r;
    return nullptr;
  }

  Report report() const { return make_report(distribution, summary, optimality); }
};

/// Runs translation, graph building, complement, coloring, audit and
/// assembly for one application of a validated bundle.
inline ApplicationPlan plan_application(const Bundle& bundle, const Registry& registry, const AppId& app,
                                        const PlanOptions& options = {}) {
  const ConfigurationTemplate* tmpl = bundle.find_template(app);
  if (tmpl == nullptr) throw DomainError("no configuration template for application '" + app.str() + "'");

  ApplicationPlan plan;
  plan.app = app;
  plan.options = options;
  plan.functionality_table = build_functionality_table(bundle, app);
  Translation tr = translate(*tmpl, plan.functionality_table, registry);
  plan.configurations = std::move(tr.configurations);

  std::vector<RvcColoring> colorings;
  bool audited = true;
  std::size_t exact_total = 0;
  for (auto& table : tr.tables) {
    RvcPlan rp;
    rp.relationships = build_relationship_graph(table);
    rp.conflicts = complement(rp.relationships);
    rp.coloring = color(rp.conflicts, options.mode);
    if (auto v = check_validity(rp.coloring, rp.conflicts); !v.empty())
      throw DomainError("invalid coloring for rvc '" + table.rvc.str() + "': " + v.front().message);
    if (rp.participating_tenants() <= std::min(options.exact_limit, kMaxExactTenants)) {
      rp.exact = exact_min_color(rp.conflicts, options.mode, options.exact_limit);
      exact_total += rp.exact->instance_count();
    } else {
      audited = false;
    }
    colorings.push_back(rp.coloring);
    rp.table = std::move(table);
    plan.rvcs.push_back(std::move(rp));
  }

  plan.distribution = assemble(colorings, *tmpl, plan.configurations);
  plan.distribution.mode = options.mode;
  plan.summary = cost_summary(plan.distribution);
  plan.optimality.audited = audited;
  if (audited) {
    plan.optimality.exact = exact_total;
    plan.optimality.gap =
        static_cast<std::int64_t>(plan.distribution.total_instances) - static_cast<std::int64_t>(exact_total);
  }
  return plan;
}

/// Plans every application that has a template, in catalog order.
inline std::vector<ApplicationPlan> plan(const Bundle& bundle, const PlanOptions& options = {}) {
  const Registry registry(bundle.tenants);
  std::vector<ApplicationPlan> out;
  for (const auto& app : bundle.applications()) out.push_back(plan_application(bundle, registry, app, options));
  return out;
}

/// The report document for a set of plans: a single object for one
/// application, an array otherwise.
inline std::string render_plans(const std::vector<ApplicationPlan>& plans, ReportFormat format) {
  if (format == ReportFormat::text) {
    std::string out;
    for (const auto& p : plans) out += render_text(p.report());
    return out;
  }
  if (plans.size() == 1) return to_json(plans.front().report()).dump(2) + "\n";
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& p : plans) arr.push_back(to_json(p.report()));
  return arr.dump(2) + "\n";
}

}  // namespace rvcloud
