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

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rvcloud/errors.hpp"
#include "rvcloud/graph.hpp"

namespace rvcloud {

/// shared_pool: one color class is one RVC instance, which may serve
/// different variants to different tenants. per_variant: every class belongs
/// to exactly one variant.
enum class PoolMode { shared_pool, per_variant };

inline std::string_view to_string(PoolMode m) {
  return m == PoolMode::shared_pool ? "shared-pool" : "per-variant";
}

inline std::optional<PoolMode> parse_pool_mode(std::string_view s) {
  if (s == "shared-pool") return PoolMode::shared_pool;
  if (s == "per-variant") return PoolMode::per_variant;
  return std::nullopt;
}

/// A tenant's use of one variant.
struct Usage {
  TenantId tenant;
  VariantId variant;

  friend bool operator==(const Usage&, const Usage&) = default;
  friend auto operator<=>(const Usage&, const Usage&) = default;
};

struct ColorClass {
  std::size_t index = 0;            // 1-based; per variant in per_variant mode
  std::optional<VariantId> variant;  // set in per_variant mode only
  std::vector<Usage> members;       // tenant order, then variant order

  friend bool operator==(const ColorClass&, const ColorClass&) = default;
};

struct RvcColoring {
  RvcId rvc;
  PoolMode mode = PoolMode::shared_pool;
  std::vector<TenantId> tenant_order;
  std::vector<VariantId> variant_order;
  std::vector<ColorClass> classes;
  std::map<Usage, std::size_t> assignment;  // usage -> class index

  std::size_t instance_count() const noexcept { return classes.size(); }

  const ColorClass* find_class(std::size_t index, const std::optional<VariantId>& variant) const {
    for (const auto& c : classes)
      if (c.index == index && c.variant == variant) return &c;
    return nullptr;
  }

  /// Class count per variant (per_variant mode); empty for shared_pool.
  std::map<VariantId, std::size_t> per_variant_counts() const {
    std::map<VariantId, std::size_t> out;
    for (const auto& c : classes)
      if (c.variant) ++out[*c.variant];
    return out;
  }

  friend bool operator==(const RvcColoring&, const RvcColoring&) = default;
};

namespace detail {

inline constexpr std::size_t kNoColor = static_cast<std::size_t>(-1);

/// Orders mapped to graph positions. Tenants that use no variant are dropped.
struct CanonicalOrder {
  std::vector<std::size_t> tenants;   // participating vertex positions
  std::vector<std::size_t> variants;  // variant positions
};

inline CanonicalOrder map_orders(const LabeledGraph& g, const std::vector<TenantId>& tenant_order,
                                 const std::vector<VariantId>& variant_order) {
  CanonicalOrder out;
  std::vector<bool> seen(g.vertex_count(), false);
  for (const auto& t : tenant_order) {
    auto i = g.vertex_index(t);
    if (!i) throw UsageError("tenant order names '" + t.str() + "', which is not a vertex");
    if (seen[*i]) throw UsageError("tenant order repeats '" + t.str() + "'");
    seen[*i] = true;
    if (g.participates(*i)) out.tenants.push_back(*i);
  }
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    if (!seen[i] && g.participates(i))
      throw UsageError("tenant order misses '" + g.vertices()[i].str() + "'");

  std::vector<bool> vseen(g.variant_count(), false);
  for (const auto& v : variant_order) {
    auto j = g.variant_index(v);
    if (!j) throw UsageError("variant order names unknown variant '" + v.str() + "'");
    if (vseen[*j]) throw UsageError("variant order repeats '" + v.str() + "'");
    vseen[*j] = true;
    out.variants.push_back(*j);
  }
  if (out.variants.size() != g.variant_count())
    throw UsageError("variant order is not a permutation of the rvc variants");
  return out;
}

/// color[vertex][variant] -> 0-based class, kNoColor where unused.
using ColorTable = std::vector<std::vector<std::size_t>>;

inline RvcColoring to_coloring(const LabeledGraph& g, PoolMode mode, const CanonicalOrder& order,
                               const ColorTable& color) {
  RvcColoring out;
  out.rvc = g.rvc();
  out.mode = mode;
  for (auto t : order.tenants) out.tenant_order.push_back(g.vertices()[t]);
  for (auto v : order.variants) out.variant_order.push_back(g.variants()[v]);

  if (mode == PoolMode::shared_pool) {
    std::size_t d = 0;
    for (auto t : order.tenants)
      for (auto v : order.variants)
        if (color[t][v] != kNoColor) d = std::max(d, color[t][v] + 1);
    out.classes.resize(d);
    for (std::size_t k = 0; k < d; ++k) out.classes[k].index = k + 1;
    for (auto t : order.tenants)
      for (auto v : order.variants)
        if (color[t][v] != kNoColor) {
          Usage u{g.vertices()[t], g.variants()[v]};
          out.classes[color[t][v]].members.push_back(u);
          out.assignment.emplace(std::move(u), color[t][v] + 1);
        }
  } else {
    for (auto v : order.variants) {
      std::vector<ColorClass> local;
      for (auto t : order.tenants) {
        const std::size_t k = color[t][v];
        if (k == kNoColor) continue;
        if (local.size() <= k) local.resize(k + 1);
        Usage u{g.vertices()[t], g.variants()[v]};
        local[k].members.push_back(u);
        out.assignment.emplace(std::move(u), k + 1);
      }
      for (std::size_t k = 0; k < local.size(); ++k) {
        local[k].index = k + 1;
        local[k].variant = g.variants()[v];
        out.classes.push_back(std::move(local[k]));
      }
    }
  }
  return out;
}

/// First class whose tenants contain no `variant`-neighbor of `vertex`.
inline std::size_t first_fit(const LabeledGraph& g, std::size_t variant, std::size_t vertex,
                             const std::vector<TenantSet>& present) {
  const TenantSet& conflicts = g.neighbors(variant, vertex);
  for (std::size_t k = 0; k < present.size(); ++k)
    if (!conflicts.intersects(present[k])) return k;
  return present.size();
}

}  // namespace detail

/// The first-fit coloring of a conflict graph with one color pool shared by
/// all variants. Tenants are visited in `tenant_order`, each tenant's
/// variants in `variant_order`; usage (Ti, Vj) takes the lowest class Ck such
/// that no tenant already in Ck (for any variant) is a Vj-neighbor of Ti,
/// opening a new class when none fits. The first participating tenant thus
/// lands in C1 with all of its variants.
inline RvcColoring greedy_color(const LabeledGraph& conflict, const std::vector<TenantId>& tenant_order,
                                const std::vector<VariantId>& variant_order) {
  const auto order = detail::map_orders(conflict, tenant_order, variant_order);
  detail::ColorTable color(conflict.vertex_count(),
                           std::vector<std::size_t>(conflict.variant_count(), detail::kNoColor));
  std::vector<TenantSet> present;
  for (auto t : order.tenants) {
    for (auto v : order.variants) {
      if (!conflict.participants(v).test(t)) continue;
      const std::size_t k = detail::first_fit(conflict, v, t, present);
      if (k == present.size()) present.emplace_back(conflict.vertex_count());
      present[k].set(t);
      color[t][v] = k;
    }
  }
  return detail::to_coloring(conflict, PoolMode::shared_pool, order, color);
}

inline RvcColoring greedy_color(const LabeledGraph& conflict) {
  return greedy_color(conflict, conflict.vertices(), conflict.variants());
}

/// First-fit run independently for every variant over that variant's
/// participants. Class indices restart at 1 for each variant.
inline RvcColoring per_variant_color(const LabeledGraph& conflict,
                                     const std::vector<TenantId>& tenant_order,
                                     const std::vector<VariantId>& variant_order) {
  const auto order = detail::map_orders(conflict, tenant_order, variant_order);
  detail::ColorTable color(conflict.vertex_count(),
                           std::vector<std::size_t>(conflict.variant_count(), detail::kNoColor));
  for (auto v : order.variants) {
    std::vector<TenantSet> present;
    for (auto t : order.tenants) {
      if (!conflict.participants(v).test(t)) continue;
      const std::size_t k = detail::first_fit(conflict, v, t, present);
      if (k == present.size()) present.emplace_back(conflict.vertex_count());
      present[k].set(t);
      color[t][v] = k;
    }
  }
  return detail::to_coloring(conflict, PoolMode::per_variant, order, color);
}

inline RvcColoring per_variant_color(const LabeledGraph& conflict) {
  return per_variant_color(conflict, conflict.vertices(), conflict.variants());
}

inline RvcColoring color(const LabeledGraph& conflict, PoolMode mode) {
  return mode == PoolMode::shared_pool ? greedy_color(conflict) : per_variant_color(conflict);
}

struct Violation {
  enum class Kind { conflict, missing, unexpected, inconsistent };

  Kind kind = Kind::conflict;
  TenantId tenant;
  VariantId variant;
  std::size_t class_index = 0;
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Re-checks a coloring against its conflict graph.
///
/// Coverage: every (tenant, variant) participation is assigned exactly once
/// and nothing else is. Classes must be the fibers of the assignment.
///
/// Conflicts are reported once per offending pair, on the member that comes
/// later in the coloring's tenant order. In shared_pool mode a member (Ti, Vj)
/// conflicts when a tenant placed earlier in its class is a Vj-neighbor of Ti,
/// the same condition first-fit tests when it places Ti.Vj. In per_variant
/// mode the class only holds Vj usages and any Vj-neighbor in it conflicts.
inline std::vector<Violation> check_validity(const RvcColoring& coloring, const LabeledGraph& conflict) {
  using K = Violation::Kind;
  std::vector<Violation> out;
  if (coloring.rvc != conflict.rvc())
    out.push_back({K::inconsistent, {}, {}, 0,
                   "coloring is for rvc '" + coloring.rvc.str() + "', graph for '" + conflict.rvc().str() + "'"});

  // Rank by the coloring's order; vertices it does not list rank after all listed ones.
  std::unordered_map<TenantId, std::size_t> vertex_of;
  for (std::size_t i = 0; i < conflict.vertex_count(); ++i) vertex_of.emplace(conflict.vertices()[i], i);
  auto vertex_index = [&](const TenantId& t) -> std::optional<std::size_t> {
    auto it = vertex_of.find(t);
    if (it == vertex_of.end()) return std::nullopt;
    return it->second;
  };
  std::vector<std::size_t> rank(conflict.vertex_count(), conflict.vertex_count());
  for (std::size_t r = 0; r < coloring.tenant_order.size(); ++r)
    if (auto i = vertex_index(coloring.tenant_order[r])) rank[*i] = r;

  for (const auto& [usage, index] : coloring.assignment) {
    auto t = vertex_index(usage.tenant);
    auto v = conflict.variant_index(usage.variant);
    if (!t || !v || !conflict.participants(*v).test(*t))
      out.push_back({K::unexpected, usage.tenant, usage.variant, index,
                     usage.tenant.str() + "." + usage.variant.str() + " is assigned but not required"});
  }
  for (std::size_t v = 0; v < conflict.variant_count(); ++v) {
    const TenantSet& part = conflict.participants(v);
    for (auto t = part.find_first(); t != TenantSet::npos; t = part.find_next(t)) {
      Usage u{conflict.vertices()[t], conflict.variants()[v]};
      if (!coloring.assignment.contains(u))
        out.push_back({K::missing, u.tenant, u.variant, 0,
                       u.tenant.str() + "." + u.variant.str() + " has no instance"});
    }
  }

  std::map<Usage, std::size_t> listed;
  for (const auto& c : coloring.classes) {
    if (c.members.empty())
      out.push_back({K::inconsistent, {}, c.variant.value_or(VariantId{}), c.index,
                     "class " + std::to_string(c.index) + " is empty"});
    if ((coloring.mode == PoolMode::per_variant) != c.variant.has_value())
      out.push_back({K::inconsistent, {}, c.variant.value_or(VariantId{}), c.index,
                     "class " + std::to_string(c.index) + " does not match the coloring mode"});
    for (const auto& m : c.members) {
      ++listed[m];
      auto it = coloring.assignment.find(m);
      if (it == coloring.assignment.end() || it->second != c.index ||
          (c.variant && *c.variant != m.variant))
        out.push_back({K::inconsistent, m.tenant, m.variant, c.index,
                       m.tenant.str() + "." + m.variant.str() + " listed in class " +
                           std::to_string(c.index) + " but assigned elsewhere"});
    }
  }
  for (const auto& [usage, index] : coloring.assignment)
    if (listed[usage] != 1)
      out.push_back({K::inconsistent, usage.tenant, usage.variant, index,
                     usage.tenant.str() + "." + usage.variant.str() + " appears in " +
                         std::to_string(listed[usage]) + " classes"});

  for (const auto& c : coloring.classes) {
    TenantSet present(conflict.vertex_count());
    for (const auto& m : c.members)
      if (auto t = vertex_index(m.tenant)) present.set(*t);
    for (const auto& m : c.members) {
      auto t = vertex_index(m.tenant);
      auto v = conflict.variant_index(m.variant);
      if (!t || !v) continue;
      const TenantSet clash = conflict.neighbors(*v, *t) & present;
      for (auto o = clash.find_first(); o != TenantSet::npos; o = clash.find_next(o)) {
        if (rank[o] > rank[*t] || (rank[o] == rank[*t] && o > *t)) continue;
        out.push_back({K::conflict, m.tenant, m.variant, c.index,
                       m.tenant.str() + "." + m.variant.str() + " shares class " + std::to_string(c.index) +
                           " with " + conflict.vertices()[o].str() + ", a " + m.variant.str() +
                           "-conflict"});
      }
    }
  }
  return out;
}

}  // namespace rvcloud
