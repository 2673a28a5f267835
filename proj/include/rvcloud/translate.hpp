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
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "rvcloud/allowed_set.hpp"
#include "rvcloud/expression.hpp"
#include "rvcloud/model.hpp"

namespace rvcloud {

/// Per-application table of what each tenant stated for each functionality it
/// selected. A selected functionality with no statement has an empty list,
/// which means SWAny.
struct FunctionalityRequirementTable {
  AppId app;
  std::map<std::pair<TenantId, FunctionalityId>, std::vector<SharingExpression>> cells;
};

/// Builds the functionality-level table from raw bundle rows. Expressions
/// are parsed here (ParseError propagates); cells for functionalities the
/// tenant did not select are dropped.
inline FunctionalityRequirementTable build_functionality_table(const Bundle& bundle,
                                                               const AppId& app) {
  FunctionalityRequirementTable table{app, {}};
  for (const auto& req : bundle.functional) {
    if (req.app != app) continue;
    for (const auto& f : req.selected) table.cells[{req.tenant, f}];
  }
  for (const auto& cell : bundle.deployment) {
    if (cell.app != app) continue;
    auto it = table.cells.find({cell.tenant, cell.functionality});
    if (it == table.cells.end()) continue;
    for (const auto& text : cell.expressions) it->second.push_back(parse_expression(text));
  }
  return table;
}

/// Where a variant-level cell got its constraints from.
struct CellSource {
  FunctionalityId functionality;
  std::vector<SharingExpression> expressions;  // empty: defaulted to SWAny
};

struct VariantCell {
  AllowedSet allowed;
  std::vector<CellSource> sources;
};

/// Per-RVC requirement table: (tenant, variant) -> folded allowed set. Tenant
/// and variant positions index `tenants` and `variants`.
struct VariantRequirementTable {
  RvcId rvc;
  std::vector<TenantId> tenants;
  std::vector<VariantId> variants;
  std::map<std::pair<std::size_t, std::size_t>, VariantCell> cells;
  std::vector<TenantSet> participants;  // per variant position

  std::optional<std::size_t> tenant_index(const TenantId& t) const {
    for (std::size_t i = 0; i < tenants.size(); ++i)
      if (tenants[i] == t) return i;
    return std::nullopt;
  }
  std::optional<std::size_t> variant_index(const VariantId& v) const {
    for (std::size_t i = 0; i < variants.size(); ++i)
      if (variants[i] == v) return i;
    return std::nullopt;
  }
  const VariantCell* find(const TenantId& t, const VariantId& v) const {
    auto ti = tenant_index(t);
    auto vi = variant_index(v);
    if (!ti || !vi) return nullptr;
    auto it = cells.find({*ti, *vi});
    return it == cells.end() ? nullptr : &it->second;
  }
};

struct RichVariantConfiguration {
  TenantId tenant;
  AppId app;
  std::set<FunctionalityId> functionalities;
  std::map<RvcId, std::set<VariantId>> variants_used;

  friend bool operator==(const RichVariantConfiguration&, const RichVariantConfiguration&) = default;
};

struct Translation {
  std::vector<VariantRequirementTable> tables;  // template rvc order
  std::vector<RichVariantConfiguration> configurations;  // registry order
};

/// Moves functionality-level requirements down to RVC variants: every
/// expression a tenant put on F constrains every variant realizing F, and
/// several constraints landing on one cell are intersected.
inline Translation translate(const ConfigurationTemplate& tmpl,
                             const FunctionalityRequirementTable& func_table,
                             const Registry& registry) {
  Translation out;
  std::map<RvcId, std::size_t> rvc_pos;
  std::vector<std::map<VariantId, std::size_t>> variant_pos;
  std::vector<TenantId> tenant_ids;
  tenant_ids.reserve(registry.size());
  for (const auto& t : registry.tenants()) tenant_ids.push_back(t.id);

  for (const auto& rvc : tmpl.rvcs) {
    rvc_pos.emplace(rvc.id, out.tables.size());
    auto& vp = variant_pos.emplace_back();
    for (std::size_t v = 0; v < rvc.variants.size(); ++v) vp.emplace(rvc.variants[v], v);
    VariantRequirementTable table;
    table.rvc = rvc.id;
    table.tenants = tenant_ids;
    table.variants = rvc.variants;
    table.participants.assign(rvc.variants.size(), registry.empty_set());
    out.tables.push_back(std::move(table));
  }

  // Cells are keyed by (TenantId, FunctionalityId); walk tenants in registry
  // order so sources and configurations come out canonically ordered.
  for (std::size_t t = 0; t < registry.size(); ++t) {
    const TenantId& tenant = registry.id(t);
    auto first = func_table.cells.lower_bound({tenant, FunctionalityId{}});
    if (first == func_table.cells.end() || first->first.first != tenant) continue;

    RichVariantConfiguration config{tenant, tmpl.app, {}, {}};
    for (auto it = first; it != func_table.cells.end() && it->first.first == tenant; ++it) {
      const FunctionalityId& f = it->first.second;
      const auto& exprs = it->second;
      config.functionalities.insert(f);

      AllowedSet folded = AllowedSet::everyone(registry, t);
      for (const auto& e : exprs) folded = combine(folded, resolve(e, t, registry));

      auto realized = tmpl.realization.find(f);
      if (realized == tmpl.realization.end()) continue;
      for (const auto& ref : realized->second) {
        auto r = rvc_pos.find(ref.rvc);
        if (r == rvc_pos.end()) continue;
        auto v = variant_pos[r->second].find(ref.variant);
        if (v == variant_pos[r->second].end()) continue;
        auto& table = out.tables[r->second];
        auto [cell, fresh] = table.cells.try_emplace({t, v->second});
        if (fresh) {
          cell->second.allowed = folded;
          table.participants[v->second].set(t);
        } else {
          cell->second.allowed = combine(cell->second.allowed, folded);
        }
        cell->second.sources.push_back({f, exprs});
        config.variants_used[ref.rvc].insert(ref.variant);
      }
    }
    out.configurations.push_back(std::move(config));
  }
  return out;
}

}  // namespace rvcloud
