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

#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rvcloud/errors.hpp"
#include "rvcloud/expression.hpp"
#include "rvcloud/model.hpp"
#include "rvcloud/pipeline.hpp"

namespace rvcloud::sim {

/// Probability of each expression form for a generated deployment cell.
struct Strictness {
  double share_any = 1.0;
  double share_just = 0.0;
  double dont_share = 0.0;
  double dont_share_any = 0.0;
};

struct ScenarioSpec {
  std::size_t tenants = 10;
  std::size_t rvcs = 1;
  std::size_t variants_per_rvc = 2;
  std::size_t functionality_count = 4;
  double selection_density = 0.5;
  Strictness strictness;
  double partner_density = 0.1;
  double competitor_density = 0.1;
  std::uint64_t seed = 0;

  /// Throws UsageError if a count is zero, a probability leaves [0,1] or the
  /// strictness weights do not sum to 1.
  void validate() const {
    auto prob = [](double p, const char* name) {
      if (!(p >= 0.0 && p <= 1.0)) throw UsageError(std::string(name) + " must be in [0,1]");
    };
    if (tenants == 0 || rvcs == 0 || variants_per_rvc == 0 || functionality_count == 0)
      throw UsageError("scenario counts must be >= 1");
    prob(selection_density, "selection_density");
    prob(partner_density, "partner_density");
    prob(competitor_density, "competitor_density");
    prob(strictness.share_any, "strictness.SWAny");
    prob(strictness.share_just, "strictness.SWJ");
    prob(strictness.dont_share, "strictness.DSW");
    prob(strictness.dont_share_any, "strictness.DSWAny");
    const double sum =
        strictness.share_any + strictness.share_just + strictness.dont_share + strictness.dont_share_any;
    if (std::abs(sum - 1.0) > 1e-9) throw UsageError("strictness weights must sum to 1");
    if (partner_density + competitor_density > 1.0 + 1e-12)
      throw UsageError("partner_density + competitor_density must not exceed 1");
  }
};

/// Explicitly seeded generator. Only raw mt19937_64 output is used (its
/// sequence is fixed by the standard), so scenarios reproduce across
/// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  std::size_t below(std::size_t n) {
    return n == 0 ? 0 : static_cast<std::size_t>(uniform() * static_cast<double>(n));
  }

 private:
  std::mt19937_64 engine_;
};

namespace detail {

inline std::string numbered(const char* prefix, std::size_t i) { return prefix + std::to_string(i + 1); }

}  // namespace detail

/// Generates a validator-clean bundle with one application "App". A pure
/// function of the spec: the random stream is consumed in a fixed pattern
/// (one form draw plus a fixed number of target draws per cell), so specs
/// differing only in strictness see the same tenants, selections and targets.
inline Bundle generate(const ScenarioSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  Bundle b;
  const std::size_t m = spec.tenants;

  for (std::size_t i = 0; i < m; ++i) b.tenants.push_back({TenantId(detail::numbered("T", i)), {}, {}});
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      const double u = rng.uniform();
      if (u < spec.partner_density)
        b.tenants[i].partners.push_back(b.tenants[j].id);
      else if (u < spec.partner_density + spec.competitor_density)
        b.tenants[i].competitors.push_back(b.tenants[j].id);
    }

  const AppId app("App");
  Application application{app, {}, {}};
  for (std::size_t f = 0; f < spec.functionality_count; ++f)
    application.functionalities.emplace_back(detail::numbered("F", f));
  b.catalog.applications.push_back(application);

  ConfigurationTemplate tmpl;
  tmpl.app = app;
  for (std::size_t r = 0; r < spec.rvcs; ++r) {
    Rvc rvc{RvcId(detail::numbered("R", r)), {}};
    for (std::size_t v = 0; v < spec.variants_per_rvc; ++v) rvc.variants.emplace_back(detail::numbered("V", v));
    tmpl.rvcs.push_back(std::move(rvc));
  }
  const std::size_t pairs = spec.rvcs * spec.variants_per_rvc;
  for (std::size_t f = 0; f < spec.functionality_count; ++f) {
    // The first pair walks all (rvc, variant) pairs so every rvc gets used
    // when there are enough functionalities; 0-2 random extra pairs follow.
    std::set<std::size_t> chosen{f % pairs};
    const std::size_t extra = rng.below(3);
    for (std::size_t k = 0; k < extra; ++k) chosen.insert(rng.below(pairs));
    auto& refs = tmpl.realization[application.functionalities[f]];
    for (auto p : chosen)
      refs.push_back({tmpl.rvcs[p % spec.rvcs].id, tmpl.rvcs[p % spec.rvcs].variants[p / spec.rvcs]});
  }
  b.templates.push_back(std::move(tmpl));

  const Strictness& w = spec.strictness;
  for (std::size_t i = 0; i < m; ++i) {
    FunctionalRequirement req{b.tenants[i].id, app, {}};
    for (std::size_t f = 0; f < spec.functionality_count; ++f)
      if (rng.uniform() < spec.selection_density) req.selected.push_back(application.functionalities[f]);
    const std::size_t fallback = rng.below(spec.functionality_count);
    if (req.selected.empty()) req.selected.push_back(application.functionalities[fallback]);

    for (const auto& f : req.selected) {
      const double u = rng.uniform();
      const std::size_t count = 1 + rng.below(3);
      std::set<SymbolicRef> targets;
      for (std::size_t k = 0; k < 3; ++k) {
        const double kind = rng.uniform();
        const std::size_t other = rng.below(m > 1 ? m - 1 : 1);
        if (k >= count) continue;
        if (kind < 0.25 || m == 1)
          targets.insert(SymbolicRef::partners());
        else if (kind < 0.5)
          targets.insert(SymbolicRef::competitors());
        else
          targets.insert(SymbolicRef::specific(b.tenants[other >= i ? other + 1 : other].id));
      }
      SharingExpression e;
      if (u < w.dont_share_any)
        e = SharingExpression::dont_share_any();
      else if (u < w.dont_share_any + w.dont_share)
        e = SharingExpression::dont_share(std::move(targets));
      else if (u < w.dont_share_any + w.dont_share + w.share_just)
        e = SharingExpression::share_just(std::move(targets));
      else
        e = SharingExpression::share_any();
      b.deployment.push_back({req.tenant, app, f, {render(e)}});
    }
    b.functional.push_back(std::move(req));
  }
  return b;
}

struct SweepOptions {
  PoolMode mode = PoolMode::shared_pool;
  std::size_t exact_limit = kDefaultExactLimit;
};

struct SweepRow {
  ScenarioSpec spec;
  std::size_t d_greedy = 0;
  std::optional<std::size_t> d_exact;
  std::optional<std::int64_t> gap;
  double ms = 0.0;
};

/// Generates and plans every scenario. Instance counts are summed over the
/// RVCs of the generated application; the exact count is only present when
/// every RVC is within the exact limit.
inline std::vector<SweepRow> sweep(const std::vector<ScenarioSpec>& specs, const SweepOptions& options = {}) {
  std::vector<SweepRow> rows;
  for (const auto& spec : specs) {
    const auto start = std::chrono::steady_clock::now();
    const Bundle bundle = generate(spec);
    auto plans = plan(bundle, {options.mode, options.exact_limit});
    const auto& p = plans.front();
    SweepRow row;
    row.spec = spec;
    row.d_greedy = p.distribution.total_instances;
    row.d_exact = p.optimality.exact;
    row.gap = p.optimality.gap;
    row.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    rows.push_back(row);
  }
  return rows;
}

inline constexpr const char* kCsvHeader = "seed,tenants,rvcs,variants,strict_dswany,d_greedy,d_exact,gap,ms";

/// CSV with kCsvHeader; unknown exact counts and gaps are empty fields.
inline std::string to_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << kCsvHeader << "\n";
  for (const auto& r : rows) {
    os << r.spec.seed << "," << r.spec.tenants << "," << r.spec.rvcs << "," << r.spec.variants_per_rvc << ","
       << r.spec.strictness.dont_share_any << "," << r.d_greedy << ",";
    if (r.d_exact) os << *r.d_exact;
    os << ",";
    if (r.gap) os << *r.gap;
    os << "," << std::fixed << std::setprecision(3) << r.ms << std::defaultfloat << "\n";
  }
  return os.str();
}

/// Reads a scenario object; absent fields keep their defaults, absent
/// strictness keys weigh 0. Throws UsageError on bad values.
inline ScenarioSpec scenario_from_json(const nlohmann::json& j) {
  ScenarioSpec s;
  try {
    s.tenants = j.value("tenants", s.tenants);
    s.rvcs = j.value("rvcs", s.rvcs);
    s.variants_per_rvc = j.value("variants_per_rvc", s.variants_per_rvc);
    s.functionality_count = j.value("functionality_count", s.functionality_count);
    s.selection_density = j.value("selection_density", s.selection_density);
    s.partner_density = j.value("partner_density", s.partner_density);
    s.competitor_density = j.value("competitor_density", s.competitor_density);
    s.seed = j.value("seed", s.seed);
    if (j.contains("strictness")) {
      const auto& w = j.at("strictness");
      for (const auto& [key, value] : w.items())
        if (key != "SWAny" && key != "SWJ" && key != "DSW" && key != "DSWAny")
          throw UsageError("unknown strictness form '" + key + "'");
      s.strictness.share_any = w.value("SWAny", 0.0);
      s.strictness.share_just = w.value("SWJ", 0.0);
      s.strictness.dont_share = w.value("DSW", 0.0);
      s.strictness.dont_share_any = w.value("DSWAny", 0.0);
    }
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("bad scenario: ") + e.what());
  }
  s.validate();
  return s;
}

inline nlohmann::ordered_json scenario_to_json(const ScenarioSpec& s) {
  return {{"tenants", s.tenants},
          {"rvcs", s.rvcs},
          {"variants_per_rvc", s.variants_per_rvc},
          {"functionality_count", s.functionality_count},
          {"selection_density", s.selection_density},
          {"strictness",
           {{"SWAny", s.strictness.share_any},
            {"SWJ", s.strictness.share_just},
            {"DSW", s.strictness.dont_share},
            {"DSWAny", s.strictness.dont_share_any}}},
          {"partner_density", s.partner_density},
          {"competitor_density", s.competitor_density},
          {"seed", s.seed}};
}

}  // namespace rvcloud::sim
