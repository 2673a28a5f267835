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
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "rvcloud/coloring.hpp"
#include "rvcloud/distribution.hpp"
#include "rvcloud/errors.hpp"

namespace rvcloud {

enum class ReportFormat { json, text };

/// Outcome of auditing greedy instance counts against the exact solver.
/// `exact`/`gap` are only set when every RVC was within the solver limit.
struct Optimality {
  bool audited = false;
  std::optional<std::size_t> exact;
  std::optional<std::int64_t> gap;

  friend bool operator==(const Optimality&, const Optimality&) = default;
};

struct InstanceEntry {
  std::size_t index = 0;
  std::optional<VariantId> variant;
  std::vector<Usage> members;

  friend bool operator==(const InstanceEntry&, const InstanceEntry&) = default;
};

struct RvcEntry {
  RvcId rvc;
  std::vector<InstanceEntry> instances;

  friend bool operator==(const RvcEntry&, const RvcEntry&) = default;
};

/// In-memory form of the plan report document.
struct Report {
  AppId app;
  PoolMode mode = PoolMode::shared_pool;
  std::vector<RvcEntry> rvcs;
  CostSummary totals;
  Optimality optimality;

  friend bool operator==(const Report&, const Report&) = default;
};

inline Report make_report(const Distribution& dist, const CostSummary& summary, const Optimality& opt) {
  Report r;
  r.app = dist.app;
  r.mode = dist.mode;
  for (const auto& c : dist.per_rvc) {
    RvcEntry e{c.rvc, {}};
    for (const auto& cls : c.classes) e.instances.push_back({cls.index, cls.variant, cls.members});
    r.rvcs.push_back(std::move(e));
  }
  r.totals = summary;
  r.optimality = opt;
  return r;
}

inline nlohmann::ordered_json to_json(const Report& r) {
  using nlohmann::ordered_json;
  ordered_json rvcs = ordered_json::array();
  for (const auto& e : r.rvcs) {
    ordered_json instances = ordered_json::array();
    for (const auto& inst : e.instances) {
      ordered_json members = ordered_json::array();
      for (const auto& m : inst.members)
        members.push_back(ordered_json{{"tenant", m.tenant.str()}, {"variant", m.variant.str()}});
      ordered_json ij;
      ij["index"] = inst.index;
      if (inst.variant) ij["variant"] = inst.variant->str();
      ij["members"] = std::move(members);
      instances.push_back(std::move(ij));
    }
    rvcs.push_back(ordered_json{{"rvc", e.rvc.str()}, {"instances", std::move(instances)}});
  }
  ordered_json doc;
  doc["app"] = r.app.str();
  doc["mode"] = std::string(to_string(r.mode));
  doc["rvcs"] = std::move(rvcs);
  doc["totals"] = ordered_json{{"instances", r.totals.instances},
                               {"single_tenancy", r.totals.single_tenancy_baseline},
                               {"pure_mt", r.totals.pure_mt_baseline},
                               {"savings_ratio", r.totals.savings_ratio}};
  ordered_json opt;
  opt["audited"] = r.optimality.audited;
  opt["exact"] = r.optimality.exact ? ordered_json(*r.optimality.exact) : ordered_json(nullptr);
  opt["gap"] = r.optimality.gap ? ordered_json(*r.optimality.gap) : ordered_json(nullptr);
  doc["optimality"] = std::move(opt);
  return doc;
}

/// Inverse of to_json. Throws InputError on documents that do not follow
/// the report schema.
inline Report report_from_json(const nlohmann::json& doc) {
  try {
    Report r;
    r.app = AppId(doc.at("app").get<std::string>());
    auto mode = parse_pool_mode(doc.at("mode").get<std::string>());
    if (!mode) throw InputError("unknown mode '" + doc.at("mode").get<std::string>() + "'");
    r.mode = *mode;
    for (const auto& e : doc.at("rvcs")) {
      RvcEntry entry{RvcId(e.at("rvc").get<std::string>()), {}};
      for (const auto& inst : e.at("instances")) {
        InstanceEntry ie;
        ie.index = inst.at("index").get<std::size_t>();
        if (inst.contains("variant")) ie.variant = VariantId(inst.at("variant").get<std::string>());
        for (const auto& m : inst.at("members"))
          ie.members.push_back({TenantId(m.at("tenant").get<std::string>()),
                                VariantId(m.at("variant").get<std::string>())});
        entry.instances.push_back(std::move(ie));
      }
      r.rvcs.push_back(std::move(entry));
    }
    const auto& t = doc.at("totals");
    r.totals.instances = t.at("instances").get<std::size_t>();
    r.totals.single_tenancy_baseline = t.at("single_tenancy").get<std::size_t>();
    r.totals.pure_mt_baseline = t.at("pure_mt").get<std::size_t>();
    r.totals.savings_ratio = t.at("savings_ratio").get<double>();
    const auto& o = doc.at("optimality");
    r.optimality.audited = o.at("audited").get<bool>();
    if (!o.at("exact").is_null()) r.optimality.exact = o.at("exact").get<std::size_t>();
    if (!o.at("gap").is_null()) r.optimality.gap = o.at("gap").get<std::int64_t>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
}

inline std::string render_text(const Report& r) {
  std::ostringstream os;
  os << "application " << r.app << " (" << to_string(r.mode) << ")\n";
  for (const auto& e : r.rvcs) {
    os << "rvc " << e.rvc << ": " << e.instances.size() << " instance" << (e.instances.size() == 1 ? "" : "s")
       << "\n";
    for (const auto& inst : e.instances) {
      os << "  ";
      if (inst.variant) os << *inst.variant << "/";
      os << "C" << inst.index << ":";
      for (const auto& m : inst.members) os << " " << m.tenant << "." << m.variant;
      os << "\n";
    }
  }
  os << "instances " << r.totals.instances << ", single-tenancy " << r.totals.single_tenancy_baseline
     << ", pure multi-tenancy " << r.totals.pure_mt_baseline << ", savings " << std::fixed << std::setprecision(1)
     << r.totals.savings_ratio * 100.0 << "%\n";
  if (r.optimality.audited)
    os << "optimality: exact " << *r.optimality.exact << ", gap " << *r.optimality.gap << "\n";
  else
    os << "optimality: not audited\n";
  return os.str();
}

inline std::string render_report(const Report& r, ReportFormat format) {
  if (format == ReportFormat::text) return render_text(r);
  return to_json(r).dump(2) + "\n";
}

inline std::string render_report(const Distribution& dist, const CostSummary& summary, const Optimality& opt,
                                 ReportFormat format) {
  return render_report(make_report(dist, summary, opt), format);
}

}  // namespace rvcloud
