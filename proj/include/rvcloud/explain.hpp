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
#include <sstream>
#include <string>
#include <vector>

#include "rvcloud/allowed_set.hpp"
#include "rvcloud/errors.hpp"
#include "rvcloud/pipeline.hpp"

namespace rvcloud {

inline std::string render(const ResolvedExpression& e, const Registry& reg) {
  auto list = [&](const char* head) {
    std::string s = std::string(head) + "(";
    bool first = true;
    for (const auto& id : member_ids(e.targets, reg)) {
      s += (first ? "" : ",") + id.str();
      first = false;
    }
    return s + ")";
  };
  switch (e.kind) {
    case ExpressionKind::share_any:
      return "SWAny";
    case ExpressionKind::dont_share_any:
      return "DSWAny";
    case ExpressionKind::share_just:
      return list("SWJ");
    case ExpressionKind::dont_share:
      return list("DSW");
  }
  return {};
}

inline std::string render_members(const TenantSet& set, const Registry& reg) {
  std::string s = "{";
  bool first = true;
  for (const auto& id : member_ids(set, reg)) {
    s += (first ? "" : ",") + id.str();
    first = false;
  }
  return s + "}";
}

/// Audit trail for one tenant on one RVC: the statements behind every
/// variant cell, each fold step with the transition rule applied, the
/// resulting allowed set, the conflict neighbors and the assigned instance.
/// Throws DomainError for unknown tenants or RVCs.
inline std::string explain(const ApplicationPlan& plan, const Registry& registry, const TenantId& tenant,
                           const RvcId& rvc) {
  const auto t = registry.find(tenant);
  if (!t) throw DomainError("unknown tenant '" + tenant.str() + "'");
  const RvcPlan* rp = plan.find(rvc);
  if (rp == nullptr) throw DomainError("unknown rvc '" + rvc.str() + "' in application '" + plan.app.str() + "'");

  std::ostringstream os;
  os << "tenant " << tenant << ", rvc " << rvc << " (application " << plan.app << ", "
     << to_string(plan.options.mode) << ")\n";
  const auto& table = rp->table;
  for (std::size_t v = 0; v < table.variants.size(); ++v) {
    const VariantId& variant = table.variants[v];
    os << "variant " << variant << ":";
    auto cell_it = table.cells.find({*t, v});
    if (cell_it == table.cells.end()) {
      os << " not used\n";
      continue;
    }
    os << "\n";
    const VariantCell& cell = cell_it->second;

    std::vector<ResolvedExpression> operands;
    for (const auto& src : cell.sources) {
      os << "  from " << src.functionality << ":";
      if (src.expressions.empty()) {
        os << " default: SWAny\n";
        operands.push_back({ExpressionKind::share_any, *t, registry.empty_set()});
        continue;
      }
      os << "\n";
      for (const auto& e : src.expressions) {
        ResolvedExpression r = resolve_form(e, *t, registry);
        os << "    " << render(e) << " => " << render(r, registry) << "\n";
        operands.push_back(std::move(r));
      }
    }

    ResolvedExpression acc = operands.front();
    for (std::size_t i = 1; i < operands.size(); ++i) {
      FoldStep step = combine_forms(acc, operands[i]);
      os << "  fold " << render(acc, registry) << " + " << render(operands[i], registry) << " by [" << step.rule
         << "] => " << render(step.result, registry) << "\n";
      acc = std::move(step.result);
    }
    os << "  allowed: " << render_members(cell.allowed.members(), registry) << " ("
       << render(cell.allowed, registry) << ")\n";

    const auto gv = rp->conflicts.vertex_index(tenant);
    std::string neighbors;
    if (gv) {
      const TenantSet& nb = rp->conflicts.neighbors(v, *gv);
      for (auto o = nb.find_first(); o != TenantSet::npos; o = nb.find_next(o))
        neighbors += (neighbors.empty() ? "" : ", ") + rp->conflicts.vertices()[o].str();
    }
    os << "  conflicts: " << (neighbors.empty() ? "none" : neighbors) << "\n";

    auto a = rp->coloring.assignment.find({tenant, variant});
    if (a == rp->coloring.assignment.end()) {
      os << "  instance: unassigned\n";
    } else {
      os << "  instance: ";
      if (rp->coloring.mode == PoolMode::per_variant) os << variant << "/";
      os << "C" << a->second << "\n";
    }
  }
  return os.str();
}

}  // namespace rvcloud
