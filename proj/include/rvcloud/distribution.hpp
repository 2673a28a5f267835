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
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rvcloud/coloring.hpp"
#include "rvcloud/errors.hpp"
#include "rvcloud/model.hpp"
#include "rvcloud/translate.hpp"

namespace rvcloud {

/// (variant, class index) a tenant is served from.
struct Placement {
  VariantId variant;
  std::size_t index = 0;

  friend bool operator==(const Placement&, const Placement&) = default;
  friend auto operator<=>(const Placement&, const Placement&) = default;
};

struct Distribution {
  AppId app;
  PoolMode mode = PoolMode::shared_pool;
  std::vector<RvcColoring> per_rvc;  // template rvc order
  std::size_t total_instances = 0;
  std::map<TenantId, std::map<RvcId, std::set<Placement>>> per_tenant_view;

  const RvcColoring* find(const RvcId& rvc) const {
    for (const auto& c : per_rvc)
      if (c.rvc == rvc) return &c;
    return nullptr;
  }
};

struct CostSummary {
  std::size_t instances = 0;
  std::size_t single_tenancy_baseline = 0;  // one instance per (rvc, participating tenant)
  std::size_t pure_mt_baseline = 0;         // one instance per rvc with any participant
  double savings_ratio = 0.0;

  friend bool operator==(const CostSummary&, const CostSummary&) = default;
};

/// Gathers per-RVC colorings into the application-level distribution and
/// checks that every variant a tenant's configuration uses got an instance.
/// Throws DomainError on a missing coloring or a coverage gap.
inline Distribution assemble(const std::vector<RvcColoring>& colorings, const ConfigurationTemplate& tmpl,
                             const std::vector<RichVariantConfiguration>& configurations) {
  Distribution dist;
  dist.app = tmpl.app;
  if (!colorings.empty()) dist.mode = colorings.front().mode;
  for (const auto& rvc : tmpl.rvcs) {
    const RvcColoring* found = nullptr;
    for (const auto& c : colorings)
      if (c.rvc == rvc.id) found = &c;
    if (found == nullptr) throw DomainError("no coloring for rvc '" + rvc.id.str() + "'");
    if (found->mode != dist.mode) throw DomainError("colorings mix shared-pool and per-variant modes");
    dist.per_rvc.push_back(*found);
    dist.total_instances += found->instance_count();
    for (const auto& [usage, index] : found->assignment)
      dist.per_tenant_view[usage.tenant][rvc.id].insert({usage.variant, index});
  }
  for (const auto& config : configurations) {
    for (const auto& [rvc, variants] : config.variants_used) {
      for (const auto& v : variants) {
        const RvcColoring* c = dist.find(rvc);
        if (c == nullptr || !c->assignment.contains({config.tenant, v}))
          throw DomainError("coverage gap: tenant '" + config.tenant.str() + "' uses " + rvc.str() + "." +
                            v.str() + " but has no instance");
      }
    }
  }
  return dist;
}

inline CostSummary cost_summary(const Distribution& dist) {
  CostSummary s;
  s.instances = dist.total_instances;
  for (const auto& c : dist.per_rvc) {
    std::set<TenantId> tenants;
    for (const auto& [usage, index] : c.assignment) tenants.insert(usage.tenant);
    s.single_tenancy_baseline += tenants.size();
    if (!tenants.empty()) ++s.pure_mt_baseline;
  }
  if (s.single_tenancy_baseline > 0 && s.instances < s.single_tenancy_baseline)
    s.savings_ratio = 1.0 - static_cast<double>(s.instances) / static_cast<double>(s.single_tenancy_baseline);
  return s;
}

/// Rebuilds the usage -> class assignment of every RVC from the tenant view.
inline std::map<RvcId, std::map<Usage, std::size_t>> assignments_from_view(const Distribution& dist) {
  std::map<RvcId, std::map<Usage, std::size_t>> out;
  for (const auto& [tenant, rvcs] : dist.per_tenant_view)
    for (const auto& [rvc, placements] : rvcs)
      for (const auto& p : placements) out[rvc][{tenant, p.variant}] = p.index;
  return out;
}

}  // namespace rvcloud
