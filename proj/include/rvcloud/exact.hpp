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
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "rvcloud/coloring.hpp"
#include "rvcloud/errors.hpp"
#include "rvcloud/graph.hpp"

namespace rvcloud {

inline constexpr std::size_t kDefaultExactLimit = 12;

/// Hard ceiling of the exact solver; tenant sets are 64-bit masks.
inline constexpr std::size_t kMaxExactTenants = 64;

namespace detail {

/// Minimum coloring under the shared-pool rule, by depth-first search over
/// tenants in canonical order. A tenant's usages are placed variant by
/// variant; class k accepts (t, v) iff no tenant already in k is a
/// v-neighbor of t. Classes are opened in first-use order, so the first
/// solution found for a given d is the lexicographically smallest one.
///
/// Two prunings keep the search small: failed states (class contents up to
/// relabeling, plus the number of unopened classes) are memoized, and once a
/// tenant's occupied-class set S failed, any sibling superset of S is skipped,
/// since occupying more classes only constrains later tenants further.
class SharedPoolSearch {
 public:
  struct Item {
    std::size_t variant;     // caller's variant position
    std::uint64_t conflicts;  // tenant positions that are variant-neighbors
  };

  /// items[p] lists tenant p's usages in variant order.
  explicit SharedPoolSearch(std::vector<std::vector<Item>> items) : items_(std::move(items)) {}

  /// Assignment per tenant and item, 0-based classes; empty if infeasible.
  std::vector<std::vector<std::size_t>> solve(std::size_t colors) {
    d_ = colors;
    present_.assign(d_, 0);
    used_ = 0;
    failed_.clear();
    choice_.assign(items_.size(), {});
    for (std::size_t p = 0; p < items_.size(); ++p) choice_[p].assign(items_[p].size(), 0);
    if (tenant(0)) return choice_;
    return {};
  }

  std::size_t tenant_count() const { return items_.size(); }

 private:
  bool tenant(std::size_t p) {
    if (p == items_.size()) return true;
    if (failed_.contains(state_key(p))) return false;
    std::vector<std::uint64_t> failed_sets;
    if (place(p, 0, 0, failed_sets)) return true;
    failed_.insert(state_key(p));
    return false;
  }

  // Places item j of tenant p; `occupied` is the class set chosen so far.
  bool place(std::size_t p, std::size_t j, std::uint64_t occupied, std::vector<std::uint64_t>& failed_sets) {
    if (j == items_[p].size()) {
      for (auto f : failed_sets)
        if ((f & occupied) == f) return false;
      const std::size_t saved_used = used_;
      const std::uint64_t bit = std::uint64_t{1} << p;
      for (std::size_t k = 0; k < d_; ++k)
        if (occupied >> k & 1) present_[k] |= bit;
      used_ = std::max<std::size_t>(used_, 64 - std::countl_zero(occupied));
      const bool ok = tenant(p + 1);
      for (std::size_t k = 0; k < d_; ++k)
        if (occupied >> k & 1) present_[k] &= ~bit;
      used_ = saved_used;
      if (!ok) failed_sets.push_back(occupied);
      return ok;
    }
    const Item& item = items_[p][j];
    const std::size_t opened = std::max<std::size_t>(used_, 64 - std::countl_zero(occupied));
    const std::size_t limit = std::min(d_, opened + 1);
    for (std::size_t k = 0; k < limit; ++k) {
      if (item.conflicts & present_[k]) continue;
      choice_[p][j] = k;
      if (place(p, j + 1, occupied | (std::uint64_t{1} << k), failed_sets)) return true;
    }
    return false;
  }

  std::string state_key(std::size_t p) const {
    std::vector<std::uint64_t> masks(present_.begin(), present_.begin() + static_cast<std::ptrdiff_t>(used_));
    std::sort(masks.begin(), masks.end());
    std::string key;
    key.reserve(16 + masks.size() * 8);
    auto put = [&key](std::uint64_t x) { key.append(reinterpret_cast<const char*>(&x), sizeof x); };
    put(p);
    put(used_);
    for (auto m : masks) put(m);
    return key;
  }

  std::vector<std::vector<Item>> items_;
  std::size_t d_ = 0;
  std::vector<std::uint64_t> present_;
  std::size_t used_ = 0;
  std::unordered_set<std::string> failed_;
  std::vector<std::vector<std::size_t>> choice_;
};

/// Size of a maximum clique of the graph given by adjacency masks.
inline std::size_t max_clique(const std::vector<std::uint64_t>& adj, std::uint64_t candidates,
                              std::size_t size = 0, std::size_t best = 0) {
  if (candidates == 0) return std::max(size, best);
  if (size + static_cast<std::size_t>(std::popcount(candidates)) <= best) return best;
  while (candidates) {
    if (size + static_cast<std::size_t>(std::popcount(candidates)) <= best) break;
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    best = max_clique(adj, candidates & adj[static_cast<std::size_t>(v)], size + 1, best);
  }
  return std::max(size, best);
}

/// Solves one shared-pool instance over `tenants` restricted to `variants`,
/// writing 0-based classes into `color`. Returns the class count.
inline std::size_t exact_shared_pool(const LabeledGraph& g, const std::vector<std::size_t>& tenants,
                                     const std::vector<std::size_t>& variants, ColorTable& color) {
  std::vector<std::size_t> pos(g.vertex_count(), kNoColor);
  std::vector<std::size_t> members;
  for (auto t : tenants) {
    bool uses = false;
    for (auto v : variants) uses = uses || g.participants(v).test(t);
    if (!uses) continue;
    pos[t] = members.size();
    members.push_back(t);
  }
  if (members.empty()) return 0;

  std::vector<std::vector<SharedPoolSearch::Item>> items(members.size());
  std::size_t lower = 1;
  for (auto v : variants) {
    std::vector<std::uint64_t> adj(members.size(), 0);
    std::uint64_t part = 0;
    for (std::size_t p = 0; p < members.size(); ++p) {
      const std::size_t t = members[p];
      if (!g.participants(v).test(t)) continue;
      part |= std::uint64_t{1} << p;
      const TenantSet& nb = g.neighbors(v, t);
      for (auto o = nb.find_first(); o != TenantSet::npos; o = nb.find_next(o))
        if (pos[o] != kNoColor) adj[p] |= std::uint64_t{1} << pos[o];
    }
    lower = std::max(lower, max_clique(adj, part));
    for (std::size_t p = 0; p < members.size(); ++p)
      if (part >> p & 1) items[p].push_back({v, adj[p]});
  }

  SharedPoolSearch search(std::move(items));
  // Each tenant opens at most one new class under first-fit, so d <= members.
  for (std::size_t d = lower; d <= members.size(); ++d) {
    auto sol = search.solve(d);
    if (sol.empty()) continue;
    std::size_t used = 0;
    for (std::size_t p = 0; p < members.size(); ++p) {
      std::size_t j = 0;
      for (auto v : variants) {
        if (!g.participants(v).test(members[p])) continue;
        color[members[p]][v] = sol[p][j++];
        used = std::max(used, color[members[p]][v] + 1);
      }
    }
    return used;
  }
  throw DomainError("exact solver found no coloring");  // unreachable: d = members always fits
}

}  // namespace detail

/// Minimum number of classes for `mode`, with ties broken by the
/// lexicographically smallest assignment in canonical (tenant, variant)
/// order. In shared_pool mode validity is the first-fit admission rule, so
/// the result never uses more classes than greedy_color. In per_variant mode
/// each variant's participants are colored to their chromatic number.
/// Throws InstanceTooLarge when more than `limit` tenants participate.
inline RvcColoring exact_min_color(const LabeledGraph& conflict, PoolMode mode,
                                   const std::vector<TenantId>& tenant_order,
                                   const std::vector<VariantId>& variant_order,
                                   std::size_t limit = kDefaultExactLimit) {
  const auto order = detail::map_orders(conflict, tenant_order, variant_order);
  const std::size_t cap = std::min(limit, kMaxExactTenants);
  if (order.tenants.size() > cap) throw InstanceTooLarge(order.tenants.size(), cap);

  detail::ColorTable color(conflict.vertex_count(),
                           std::vector<std::size_t>(conflict.variant_count(), detail::kNoColor));
  if (mode == PoolMode::shared_pool) {
    detail::exact_shared_pool(conflict, order.tenants, order.variants, color);
  } else {
    for (auto v : order.variants) detail::exact_shared_pool(conflict, order.tenants, {v}, color);
  }
  return detail::to_coloring(conflict, mode, order, color);
}

inline RvcColoring exact_min_color(const LabeledGraph& conflict, PoolMode mode,
                                   std::size_t limit = kDefaultExactLimit) {
  return exact_min_color(conflict, mode, conflict.vertices(), conflict.variants(), limit);
}

}  // namespace rvcloud
