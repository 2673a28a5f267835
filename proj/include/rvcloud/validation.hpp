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
#include <tuple>
#include <utility>
#include <vector>

#include "rvcloud/errors.hpp"
#include "rvcloud/expression.hpp"
#include "rvcloud/model.hpp"

namespace rvcloud {

struct Issue {
  std::string path;  // e.g. "registry.tenants[2].partners[0]"
  std::string message;

  friend bool operator==(const Issue&, const Issue&) = default;
};

struct ValidationReport {
  std::vector<Issue> errors;
  std::vector<Issue> warnings;

  bool ok() const noexcept { return errors.empty(); }
};

namespace detail {

class BundleValidator {
 public:
  explicit BundleValidator(const Bundle& b) : b_(b) {}

  ValidationReport run() {
    check_catalog();
    check_templates();
    check_registry();
    check_functional();
    check_deployment();
    return std::move(report_);
  }

 private:
  static std::string idx(std::string_view base, std::size_t i) {
    return std::string(base) + "[" + std::to_string(i) + "]";
  }

  void error(std::string path, std::string msg) {
    report_.errors.push_back({std::move(path), std::move(msg)});
  }
  void warning(std::string path, std::string msg) {
    report_.warnings.push_back({std::move(path), std::move(msg)});
  }

  void check_catalog() {
    std::set<AppId> seen;
    for (std::size_t i = 0; i < b_.catalog.applications.size(); ++i) {
      const auto& app = b_.catalog.applications[i];
      const std::string path = idx("catalog.applications", i);
      if (app.id.empty()) error(path + ".id", "empty application id");
      if (!seen.insert(app.id).second)
        error(path + ".id", "duplicate application id '" + app.id.str() + "'");
      std::set<FunctionalityId> funcs;
      for (std::size_t j = 0; j < app.functionalities.size(); ++j) {
        const auto& f = app.functionalities[j];
        const std::string fpath = idx(path + ".functionalities", j);
        if (f.empty()) error(fpath, "empty functionality id");
        if (!funcs.insert(f).second)
          error(fpath, "duplicate functionality id '" + f.str() + "'");
      }
      for (const auto& [f, text] : app.variation_points)
        if (!funcs.contains(f))
          error(path + ".variation_points." + f.str(),
                "variation point for unknown functionality '" + f.str() + "'");
    }
  }

  void check_templates() {
    std::set<AppId> seen;
    for (std::size_t i = 0; i < b_.templates.size(); ++i) {
      const auto& t = b_.templates[i];
      const std::string path = idx("templates", i);
      const Application* app = b_.catalog.find(t.app);
      if (app == nullptr) error(path + ".app", "template for unknown application '" + t.app.str() + "'");
      if (!seen.insert(t.app).second)
        error(path + ".app", "duplicate template for application '" + t.app.str() + "'");

      std::map<RvcId, std::set<VariantId>> declared;
      for (std::size_t r = 0; r < t.rvcs.size(); ++r) {
        const auto& rvc = t.rvcs[r];
        const std::string rpath = idx(path + ".rvcs", r);
        if (rvc.id.empty()) error(rpath + ".id", "empty rvc id");
        if (declared.contains(rvc.id)) error(rpath + ".id", "duplicate rvc id '" + rvc.id.str() + "'");
        auto& vars = declared[rvc.id];
        if (rvc.variants.empty()) error(rpath + ".variants", "rvc '" + rvc.id.str() + "' declares no variant");
        for (std::size_t v = 0; v < rvc.variants.size(); ++v) {
          const auto& var = rvc.variants[v];
          if (var.empty()) error(idx(rpath + ".variants", v), "empty variant id");
          if (!vars.insert(var).second)
            error(idx(rpath + ".variants", v), "duplicate variant id '" + var.str() + "'");
        }
      }

      for (const auto& [f, refs] : t.realization) {
        const std::string fpath = path + ".realization." + f.str();
        if (app != nullptr && !app->offers(f))
          error(fpath, "functionality '" + f.str() + "' is not in the catalog for '" + t.app.str() + "'");
        if (refs.empty()) error(fpath, "functionality '" + f.str() + "' is realized by no variant");
        for (std::size_t k = 0; k < refs.size(); ++k) {
          const auto& ref = refs[k];
          auto it = declared.find(ref.rvc);
          if (it == declared.end())
            error(idx(fpath, k), "unknown rvc '" + ref.rvc.str() + "'");
          else if (!it->second.contains(ref.variant))
            error(idx(fpath, k), "unknown variant '" + ref.variant.str() + "' of rvc '" + ref.rvc.str() + "'");
        }
      }
      if (app != nullptr)
        for (const auto& f : app->functionalities)
          if (!t.realization.contains(f))
            error(path + ".realization", "functionality '" + f.str() + "' has no realization");
    }
  }

  void check_registry() {
    for (std::size_t i = 0; i < b_.tenants.size(); ++i) {
      const auto& t = b_.tenants[i];
      const std::string path = idx("registry.tenants", i);
      if (t.id.empty()) error(path + ".id", "empty tenant id");
      if (!tenants_.insert(t.id).second) error(path + ".id", "duplicate tenant id '" + t.id.str() + "'");
    }
    for (std::size_t i = 0; i < b_.tenants.size(); ++i) {
      const auto& t = b_.tenants[i];
      const std::string path = idx("registry.tenants", i);
      auto check_refs = [&](const std::vector<TenantId>& refs, const char* field) {
        for (std::size_t j = 0; j < refs.size(); ++j) {
          const std::string rpath = idx(path + "." + field, j);
          if (refs[j] == t.id)
            error(rpath, "tenant '" + t.id.str() + "' lists itself among its " + field);
          else if (!tenants_.contains(refs[j]))
            error(rpath, "unknown tenant '" + refs[j].str() + "'");
        }
      };
      check_refs(t.partners, "partners");
      check_refs(t.competitors, "competitors");
    }
  }

  void check_functional() {
    std::set<std::pair<TenantId, AppId>> seen;
    for (std::size_t i = 0; i < b_.functional.size(); ++i) {
      const auto& req = b_.functional[i];
      const std::string path = idx("functional", i);
      const Application* app = b_.catalog.find(req.app);
      if (app == nullptr) error(path + ".app", "unknown application '" + req.app.str() + "'");
      else if (b_.find_template(req.app) == nullptr)
        error(path + ".app", "application '" + req.app.str() + "' has no configuration template");
      if (!tenants_.contains(req.tenant)) error(path + ".tenant", "unknown tenant '" + req.tenant.str() + "'");
      if (!seen.insert({req.tenant, req.app}).second)
        error(path, "duplicate selection for tenant '" + req.tenant.str() + "' in '" + req.app.str() + "'");
      if (req.selected.empty()) error(path + ".functionalities", "empty functionality selection");
      std::set<FunctionalityId> picked;
      for (std::size_t j = 0; j < req.selected.size(); ++j) {
        const auto& f = req.selected[j];
        const std::string fpath = idx(path + ".functionalities", j);
        if (app != nullptr && !app->offers(f))
          error(fpath, "functionality '" + f.str() + "' is not in the catalog for '" + req.app.str() + "'");
        if (!picked.insert(f).second) error(fpath, "duplicate functionality '" + f.str() + "'");
      }
      selected_[{req.tenant, req.app}].insert(picked.begin(), picked.end());
    }
  }

  void check_deployment() {
    std::set<std::tuple<TenantId, AppId, FunctionalityId>> covered;
    for (std::size_t i = 0; i < b_.deployment.size(); ++i) {
      const auto& cell = b_.deployment[i];
      const std::string path = idx("deployment", i);
      const Application* app = b_.catalog.find(cell.app);
      bool ok = true;
      if (app == nullptr) {
        error(path + ".app", "unknown application '" + cell.app.str() + "'");
        ok = false;
      } else if (!app->offers(cell.functionality)) {
        error(path + ".functionality",
              "functionality '" + cell.functionality.str() + "' is not in the catalog for '" + cell.app.str() + "'");
        ok = false;
      }
      if (!tenants_.contains(cell.tenant)) {
        error(path + ".tenant", "unknown tenant '" + cell.tenant.str() + "'");
        ok = false;
      }
      for (std::size_t j = 0; j < cell.expressions.size(); ++j) {
        const std::string epath = idx(path + ".expressions", j);
        try {
          SharingExpression e = parse_expression(cell.expressions[j]);
          for (const auto& ref : e.targets) {
            if (ref.kind != SymbolicRef::Kind::specific) continue;
            if (ref.tenant == cell.tenant)
              warning(epath, "self-reference stripped: '" + ref.tenant.str() + "' in " + cell.expressions[j]);
            else if (!tenants_.contains(ref.tenant))
              error(epath, "unknown tenant '" + ref.tenant.str() + "' in " + cell.expressions[j]);
          }
        } catch (const ParseError& e) {
          error(epath, "syntax error in '" + cell.expressions[j] + "': " + e.what());
        }
      }
      if (!ok) continue;
      auto sel = selected_.find({cell.tenant, cell.app});
      if (sel == selected_.end() || !sel->second.contains(cell.functionality)) {
        warning(path, "ignored: tenant '" + cell.tenant.str() + "' did not select '" +
                          cell.functionality.str() + "'");
        continue;
      }
      if (!cell.expressions.empty()) covered.insert({cell.tenant, cell.app, cell.functionality});
    }
    for (std::size_t i = 0; i < b_.functional.size(); ++i) {
      const auto& req = b_.functional[i];
      const Application* app = b_.catalog.find(req.app);
      if (app == nullptr) continue;
      for (std::size_t j = 0; j < req.selected.size(); ++j)
        if (app->offers(req.selected[j]) && !covered.contains({req.tenant, req.app, req.selected[j]}))
          warning(idx(idx("functional", i) + ".functionalities", j),
                  "no deployment requirement for '" + req.selected[j].str() + "'; defaulted to SWAny");
    }
  }

  const Bundle& b_;
  ValidationReport report_;
  std::set<TenantId> tenants_;
  std::map<std::pair<TenantId, AppId>, std::set<FunctionalityId>> selected_;
};

}  // namespace detail

/// Checks every cross-reference and structural invariant of an input bundle.
/// Never throws on content; problems come back as errors (with a path to the
/// offending element) or warnings (stripped self-references, defaulted cells,
/// ignored cells).
inline ValidationReport validate_bundle(const Bundle& bundle) {
  return detail::BundleValidator(bundle).run();
}

inline ValidationReport validate_bundle(const Catalog& catalog,
                                        const std::vector<ConfigurationTemplate>& templates,
                                        const std::vector<Tenant>& registry,
                                        const std::vector<FunctionalRequirement>& functional,
                                        const std::vector<DeploymentCell>& deployment) {
  return validate_bundle(Bundle{catalog, templates, registry, functional, deployment});
}

}  // namespace rvcloud
