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

// rvplan: validate, plan, explain and export multi-tenant instance
// distributions from a requirement bundle; benchmark on generated ones.
//
// Exit codes: 0 success, 1 domain error (validation, unknown ids, coverage),
// 2 I/O or parse error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rvcloud/rvcloud.hpp"

namespace {

using namespace rvcloud;
namespace fs = std::filesystem;

constexpr int kOk = 0;
constexpr int kDomainError = 1;
constexpr int kInputError = 2;

struct BundleArgs {
  std::string dir;
  io::BundlePaths paths;
  std::vector<std::string> templates, functional, deployment;
  std::string catalog, registry;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--bundle", dir, "Bundle directory (catalog.json, registry.json, <app>.*.json)");
    cmd->add_option("--catalog", catalog, "Catalog file");
    cmd->add_option("--registry", registry, "Tenant registry file");
    cmd->add_option("--template", templates, "Configuration template file (one per application)");
    cmd->add_option("--functional", functional, "Functional requirements file (one per application)");
    cmd->add_option("--deployment", deployment, "Deployment requirements file (one per application)");
  }

  Bundle load() const {
    io::BundlePaths p;
    if (!dir.empty()) p = io::bundle_paths(dir);
    if (!catalog.empty()) p.catalog = catalog;
    if (!registry.empty()) p.registry = registry;
    for (const auto& f : templates) p.templates.emplace_back(f);
    for (const auto& f : functional) p.functional.emplace_back(f);
    for (const auto& f : deployment) p.deployment.emplace_back(f);
    if (p.catalog.empty() || p.registry.empty()) throw InputError("need --bundle or --catalog and --registry");
    return io::load_bundle(p);
  }
};

std::size_t default_exact_limit() {
  if (const char* env = std::getenv("RV_EXACT_LIMIT")) {
    try {
      return static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
      throw InputError(std::string("RV_EXACT_LIMIT is not a number: '") + env + "'");
    }
  }
  return kDefaultExactLimit;
}

void print_report(const ValidationReport& r, std::ostream& os) {
  for (const auto& e : r.errors) os << "error: " << e.path << ": " << e.message << "\n";
  for (const auto& w : r.warnings) os << "warning: " << w.path << ": " << w.message << "\n";
  os << r.errors.size() << " error(s), " << r.warnings.size() << " warning(s)\n";
}

/// Loads and validates; prints validation errors to stderr and returns
/// nullopt when the bundle is not usable.
std::optional<Bundle> load_valid(const BundleArgs& args) {
  Bundle b = args.load();
  ValidationReport r = validate_bundle(b);
  if (!r.ok()) {
    print_report(r, std::cerr);
    return std::nullopt;
  }
  return b;
}

void write_output(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-")
    std::cout << text;
  else
    io::write_text(out, text);
}

const ApplicationPlan& pick_plan(const std::vector<ApplicationPlan>& plans, const std::string& app,
                                 const std::string& rvc) {
  for (const auto& p : plans) {
    if (!app.empty() && p.app.str() != app) continue;
    if (rvc.empty() || p.find(RvcId(rvc)) != nullptr) return p;
  }
  throw DomainError(app.empty() ? "unknown rvc '" + rvc + "'"
                                : "unknown rvc '" + rvc + "' in application '" + app + "'");
}

PlanOptions plan_options(const std::string& mode, std::optional<std::size_t> limit) {
  PlanOptions o;
  auto m = parse_pool_mode(mode);
  if (!m) throw InputError("unknown mode '" + mode + "'");
  o.mode = *m;
  o.exact_limit = limit ? *limit : default_exact_limit();
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-tenant instance planner for rich-variant components"};
  app.require_subcommand(1);

  BundleArgs bundle_args;
  std::string mode = "shared-pool";
  std::optional<std::size_t> exact_limit;
  std::string out, format = "json", tenant, rvc, app_id, kind = "conflict", spec;

  auto* validate = app.add_subcommand("validate", "Check a bundle for consistency");
  bundle_args.add_to(validate);

  auto* plan_cmd = app.add_subcommand("plan", "Compute the instance distribution of every application");
  bundle_args.add_to(plan_cmd);
  plan_cmd->add_option("--mode", mode, "shared-pool or per-variant")->check(CLI::IsMember({"shared-pool", "per-variant"}));
  plan_cmd->add_option("--exact-limit", exact_limit, "Max participating tenants for the exact audit");
  plan_cmd->add_option("--out", out, "Report file (default stdout)");
  plan_cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* explain_cmd = app.add_subcommand("explain", "Trace one tenant's requirements on one RVC");
  bundle_args.add_to(explain_cmd);
  explain_cmd->add_option("--tenant", tenant, "Tenant id")->required();
  explain_cmd->add_option("--rvc", rvc, "RVC id")->required();
  explain_cmd->add_option("--app", app_id, "Application id (when several contain the RVC)");
  explain_cmd->add_option("--mode", mode, "shared-pool or per-variant")->check(CLI::IsMember({"shared-pool", "per-variant"}));
  explain_cmd->add_option("--exact-limit", exact_limit, "Max participating tenants for the exact audit");

  auto* export_cmd = app.add_subcommand("export", "Write an RVC graph in DOT format");
  bundle_args.add_to(export_cmd);
  export_cmd->add_option("--rvc", rvc, "RVC id")->required();
  export_cmd->add_option("--app", app_id, "Application id (when several contain the RVC)");
  export_cmd->add_option("--kind", kind, "relationship or conflict")->check(CLI::IsMember({"relationship", "conflict"}));
  export_cmd->add_option("--out", out, "DOT file (default stdout)");

  auto* bench = app.add_subcommand("bench", "Run a sweep over generated scenarios");
  bench->add_option("--spec", spec, "Sweep specification (JSON)")->required();
  bench->add_option("--out", out, "CSV file (default stdout)");

  auto* generate = app.add_subcommand("generate", "Write a generated bundle for one scenario");
  generate->add_option("--spec", spec, "Scenario specification (JSON)")->required();
  generate->add_option("--out", out, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (validate->parsed()) {
      Bundle b = bundle_args.load();
      ValidationReport r = validate_bundle(b);
      print_report(r, std::cout);
      return r.ok() ? kOk : kDomainError;
    }

    if (plan_cmd->parsed()) {
      const PlanOptions options = plan_options(mode, exact_limit);
      auto b = load_valid(bundle_args);
      if (!b) return kDomainError;
      auto plans = plan(*b, options);
      write_output(out, render_plans(plans, format == "text" ? ReportFormat::text : ReportFormat::json));
      return kOk;
    }

    if (explain_cmd->parsed()) {
      const PlanOptions options = plan_options(mode, exact_limit);
      auto b = load_valid(bundle_args);
      if (!b) return kDomainError;
      const Registry registry(b->tenants);
      if (!registry.find(TenantId(tenant))) throw DomainError("unknown tenant '" + tenant + "'");
      auto plans = plan(*b, options);
      std::cout << explain(pick_plan(plans, app_id, rvc), registry, TenantId(tenant), RvcId(rvc));
      return kOk;
    }

    if (export_cmd->parsed()) {
      auto b = load_valid(bundle_args);
      if (!b) return kDomainError;
      PlanOptions options;
      options.exact_limit = 0;
      auto plans = plan(*b, options);
      const RvcPlan* rp = pick_plan(plans, app_id, rvc).find(RvcId(rvc));
      const bool rel = kind == "relationship";
      write_output(out, export_dot(rel ? rp->relationships : rp->conflicts,
                                   rel ? GraphKind::relationship : GraphKind::conflict));
      return kOk;
    }

    if (bench->parsed()) {
      const auto doc = io::read_json(spec);
      std::vector<sim::ScenarioSpec> specs;
      sim::SweepOptions options;
      options.exact_limit = default_exact_limit();
      try {
        if (!doc.is_object() || !doc.contains("scenarios") || !doc.at("scenarios").is_array())
          throw UsageError("sweep spec needs a 'scenarios' array");
        if (doc.contains("exact_limit")) options.exact_limit = doc.at("exact_limit").get<std::size_t>();
        if (doc.contains("mode")) {
          auto m = parse_pool_mode(doc.at("mode").get<std::string>());
          if (!m) throw UsageError("unknown mode in sweep spec");
          options.mode = *m;
        }
        for (const auto& s : doc.at("scenarios")) specs.push_back(sim::scenario_from_json(s));
      } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("bad sweep spec: ") + e.what());
      }
      write_output(out, sim::to_csv(sim::sweep(specs, options)));
      return kOk;
    }

    if (generate->parsed()) {
      const auto doc = io::read_json(spec);
      io::write_bundle(sim::generate(sim::scenario_from_json(doc)), out);
      return kOk;
    }
  } catch (const InputError& e) {
    std::cerr << "rvplan: " << e.what() << "\n";
    return kInputError;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "rvplan: " << e.what() << "\n";
    return kInputError;
  } catch (const ParseError& e) {
    std::cerr << "rvplan: " << e.what() << "\n";
    return kDomainError;
  } catch (const Error& e) {
    std::cerr << "rvplan: " << e.what() << "\n";
    return kDomainError;
  }
  return kOk;
}
