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
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "rvcloud/errors.hpp"
#include "rvcloud/ids.hpp"

namespace rvcloud {

/// Set of tenants keyed by registry position.
using TenantSet = boost::dynamic_bitset<std::uint64_t>;

struct Tenant {
  TenantId id;
  std::vector<TenantId> partners;
  std::vector<TenantId> competitors;

  friend bool operator==(const Tenant&, const Tenant&) = default;
};

/// Rich-variant component. Variant order is the canonical iteration order.
struct Rvc {
  RvcId id;
  std::vector<VariantId> variants;

  friend bool operator==(const Rvc&, const Rvc&) = default;
};

struct Application {
  AppId id;
  std::vector<FunctionalityId> functionalities;
  std::map<FunctionalityId, std::string> variation_points;

  bool offers(const FunctionalityId& f) const {
    return std::find(functionalities.begin(), functionalities.end(), f) != functionalities.end();
  }

  friend bool operator==(const Application&, const Application&) = default;
};

struct Catalog {
  std::vector<Application> applications;

  const Application* find(const AppId& app) const {
    for (const auto& a : applications)
      if (a.id == app) return &a;
    return nullptr;
  }

  friend bool operator==(const Catalog&, const Catalog&) = default;
};

struct VariantRef {
  RvcId rvc;
  VariantId variant;

  friend bool operator==(const VariantRef&, const VariantRef&) = default;
  friend auto operator<=>(const VariantRef&, const VariantRef&) = default;
};

struct ConfigurationTemplate {
  AppId app;
  std::vector<Rvc> rvcs;
  std::map<FunctionalityId, std::vector<VariantRef>> realization;

  const Rvc* find_rvc(const RvcId& id) const {
    for (const auto& r : rvcs)
      if (r.id == id) return &r;
    return nullptr;
  }

  friend bool operator==(const ConfigurationTemplate&, const ConfigurationTemplate&) = default;
};

struct FunctionalRequirement {
  TenantId tenant;
  AppId app;
  std::vector<FunctionalityId> selected;

  friend bool operator==(const FunctionalRequirement&, const FunctionalRequirement&) = default;
};

/// One row of the raw deployment-requirement table. Expressions are kept as
/// text until validation/translation parses them.
struct DeploymentCell {
  TenantId tenant;
  AppId app;
  FunctionalityId functionality;
  std::vector<std::string> expressions;

  friend bool operator==(const DeploymentCell&, const DeploymentCell&) = default;
};

/// Everything read from the input files.
struct Bundle {
  Catalog catalog;
  std::vector<ConfigurationTemplate> templates;
  std::vector<Tenant> tenants;
  std::vector<FunctionalRequirement> functional;
  std::vector<DeploymentCell> deployment;

  const ConfigurationTemplate* find_template(const AppId& app) const {
    for (const auto& t : templates)
      if (t.app == app) return &t;
    return nullptr;
  }

  /// Applications that have a configuration template, in catalog order.
  std::vector<AppId> applications() const {
    std::vector<AppId> out;
    for (const auto& a : catalog.applications)
      if (find_template(a.id) != nullptr) out.push_back(a.id);
    return out;
  }

  friend bool operator==(const Bundle&, const Bundle&) = default;
};

/// Indexed view of the tenant list. Positions follow declaration order and
/// are the canonical tenant order used everywhere downstream. References that
/// do not resolve are ignored here; validate_bundle reports them.
class Registry {
 public:
  Registry() = default;

  explicit Registry(std::vector<Tenant> tenants) : tenants_(std::move(tenants)) {
    const std::size_t n = tenants_.size();
    index_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) index_.emplace(tenants_[i].id, i);
    partners_.assign(n, TenantSet(n));
    competitors_.assign(n, TenantSet(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& p : tenants_[i].partners)
        if (auto j = find(p); j && *j != i) partners_[i].set(*j);
      for (const auto& c : tenants_[i].competitors)
        if (auto j = find(c); j && *j != i) competitors_[i].set(*j);
    }
  }

  std::size_t size() const noexcept { return tenants_.size(); }
  const std::vector<Tenant>& tenants() const noexcept { return tenants_; }
  const TenantId& id(std::size_t i) const { return tenants_.at(i).id; }

  std::optional<std::size_t> find(const TenantId& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t index(const TenantId& id) const {
    if (auto i = find(id)) return *i;
    throw ResolutionError("unknown tenant '" + id.str() + "'");
  }

  const TenantSet& partners(std::size_t i) const { return partners_.at(i); }
  const TenantSet& competitors(std::size_t i) const { return competitors_.at(i); }

  TenantSet empty_set() const { return TenantSet(size()); }

  /// Every registered tenant except `declarer`.
  TenantSet everyone_but(std::size_t declarer) const {
    TenantSet s(size());
    s.set();
    s.reset(declarer);
    return s;
  }

 private:
  std::vector<Tenant> tenants_;
  std::unordered_map<TenantId, std::size_t> index_;
  std::vector<TenantSet> partners_;
  std::vector<TenantSet> competitors_;
};

}  // namespace rvcloud
