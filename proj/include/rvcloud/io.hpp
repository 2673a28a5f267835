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
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rvcloud/errors.hpp"
#include "rvcloud/model.hpp"

namespace rvcloud::io {

inline constexpr int kSchemaVersion = 1;

using nlohmann::json;
using nlohmann::ordered_json;

inline std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw InputError("write failed for '" + path.string() + "'");
}

inline ordered_json read_json(const std::filesystem::path& path) {
  const std::string text = read_text(path);
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("'" + path.string() + "': " + e.what());
  }
}

namespace detail {

template <typename Fn>
auto decoding(const char* what, Fn&& fn) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

inline void check_schema(const ordered_json& doc, const char* what) {
  if (!doc.is_object()) throw InputError(std::string(what) + ": expected a JSON object");
  if (!doc.contains("rv_schema")) throw InputError(std::string(what) + ": missing rv_schema");
  const auto& v = doc.at("rv_schema");
  if (!v.is_number_integer() || v.get<int>() != kSchemaVersion)
    throw InputError(std::string(what) + ": unsupported rv_schema " + v.dump());
}

template <typename IdT>
std::vector<IdT> id_list(const ordered_json& arr) {
  std::vector<IdT> out;
  for (const auto& x : arr) out.emplace_back(x.get<std::string>());
  return out;
}

template <typename IdT>
ordered_json to_array(const std::vector<IdT>& ids) {
  ordered_json arr = ordered_json::array();
  for (const auto& id : ids) arr.push_back(id.str());
  return arr;
}

}  // namespace detail

inline Catalog parse_catalog(const ordered_json& doc) {
  detail::check_schema(doc, "catalog");
  return detail::decoding("catalog", [&] {
    Catalog c;
    for (const auto& a : doc.at("applications")) {
      Application app;
      app.id = AppId(a.at("id").get<std::string>());
      app.functionalities = detail::id_list<FunctionalityId>(a.at("functionalities"));
      if (a.contains("variation_points"))
        for (const auto& [k, v] : a.at("variation_points").items())
          app.variation_points.emplace(FunctionalityId(k), v.get<std::string>());
      c.applications.push_back(std::move(app));
    }
    return c;
  });
}

inline ConfigurationTemplate parse_template(const ordered_json& doc) {
  detail::check_schema(doc, "template");
  return detail::decoding("template", [&] {
    ConfigurationTemplate t;
    t.app = AppId(doc.at("app").get<std::string>());
    for (const auto& r : doc.at("rvcs"))
      t.rvcs.push_back({RvcId(r.at("id").get<std::string>()), detail::id_list<VariantId>(r.at("variants"))});
    for (const auto& [f, refs] : doc.at("realization").items()) {
      auto& list = t.realization[FunctionalityId(f)];
      for (const auto& ref : refs)
        list.push_back({RvcId(ref.at("rvc").get<std::string>()), VariantId(ref.at("variant").get<std::string>())});
    }
    return t;
  });
}

inline std::vector<Tenant> parse_registry(const ordered_json& doc) {
  detail::check_schema(doc, "registry");
  return detail::decoding("registry", [&] {
    std::vector<Tenant> out;
    for (const auto& t : doc.at("tenants")) {
      Tenant tenant;
      tenant.id = TenantId(t.at("id").get<std::string>());
      if (t.contains("partners")) tenant.partners = detail::id_list<TenantId>(t.at("partners"));
      if (t.contains("competitors")) tenant.competitors = detail::id_list<TenantId>(t.at("competitors"));
      out.push_back(std::move(tenant));
    }
    return out;
  });
}

inline std::vector<FunctionalRequirement> parse_functional(const ordered_json& doc) {
  detail::check_schema(doc, "functional requirements");
  return detail::decoding("functional requirements", [&] {
    std::vector<FunctionalRequirement> out;
    const AppId app(doc.at("app").get<std::string>());
    for (const auto& s : doc.at("selections"))
      out.push_back({TenantId(s.at("tenant").get<std::string>()), app,
                     detail::id_list<FunctionalityId>(s.at("functionalities"))});
    return out;
  });
}

inline std::vector<DeploymentCell> parse_deployment(const ordered_json& doc) {
  detail::check_schema(doc, "deployment requirements");
  return detail::decoding("deployment requirements", [&] {
    std::vector<DeploymentCell> out;
    const AppId app(doc.at("app").get<std::string>());
    for (const auto& c : doc.at("cells")) {
      DeploymentCell cell;
      cell.tenant = TenantId(c.at("tenant").get<std::string>());
      cell.app = app;
      cell.functionality = FunctionalityId(c.at("functionality").get<std::string>());
      for (const auto& e : c.at("expressions")) cell.expressions.push_back(e.get<std::string>());
      out.push_back(std::move(cell));
    }
    return out;
  });
}

inline ordered_json dump_catalog(const Catalog& c) {
  ordered_json apps = ordered_json::array();
  for (const auto& a : c.applications) {
    ordered_json j{{"id", a.id.str()}, {"functionalities", detail::to_array(a.functionalities)}};
    if (!a.variation_points.empty()) {
      ordered_json vp = ordered_json::object();
      for (const auto& [f, text] : a.variation_points) vp[f.str()] = text;
      j["variation_points"] = std::move(vp);
    }
    apps.push_back(std::move(j));
  }
  return {{"rv_schema", kSchemaVersion}, {"applications", std::move(apps)}};
}

inline ordered_json dump_template(const ConfigurationTemplate& t) {
  ordered_json rvcs = ordered_json::array();
  for (const auto& r : t.rvcs) rvcs.push_back({{"id", r.id.str()}, {"variants", detail::to_array(r.variants)}});
  ordered_json real = ordered_json::object();
  for (const auto& [f, refs] : t.realization) {
    ordered_json list = ordered_json::array();
    for (const auto& ref : refs) list.push_back({{"rvc", ref.rvc.str()}, {"variant", ref.variant.str()}});
    real[f.str()] = std::move(list);
  }
  return {{"rv_schema", kSchemaVersion}, {"app", t.app.str()}, {"rvcs", std::move(rvcs)}, {"realization", std::move(real)}};
}

inline ordered_json dump_registry(const std::vector<Tenant>& tenants) {
  ordered_json arr = ordered_json::array();
  for (const auto& t : tenants)
    arr.push_back({{"id", t.id.str()},
                   {"partners", detail::to_array(t.partners)},
                   {"competitors", detail::to_array(t.competitors)}});
  return {{"rv_schema", kSchemaVersion}, {"tenants", std::move(arr)}};
}

inline ordered_json dump_functional(const AppId& app, const std::vector<FunctionalRequirement>& reqs) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : reqs)
    if (r.app == app) arr.push_back({{"tenant", r.tenant.str()}, {"functionalities", detail::to_array(r.selected)}});
  return {{"rv_schema", kSchemaVersion}, {"app", app.str()}, {"selections", std::move(arr)}};
}

inline ordered_json dump_deployment(const AppId& app, const std::vector<DeploymentCell>& cells) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : cells)
    if (c.app == app)
      arr.push_back({{"tenant", c.tenant.str()}, {"functionality", c.functionality.str()}, {"expressions", c.expressions}});
  return {{"rv_schema", kSchemaVersion}, {"app", app.str()}, {"cells", std::move(arr)}};
}

/// Locations of the input files of one bundle. Template, functional and
/// deployment files come one per application.
struct BundlePaths {
  std::filesystem::path catalog;
  std::filesystem::path registry;
  std::vector<std::filesystem::path> templates;
  std::vector<std::filesystem::path> functional;
  std::vector<std::filesystem::path> deployment;
};

/// Directory layout: catalog.json, registry.json and, per application,
/// <app>.template.json, <app>.functional.json, <app>.deployment.json.
inline BundlePaths bundle_paths(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw InputError("'" + dir.string() + "' is not a directory");
  BundlePaths p;
  p.catalog = dir / "catalog.json";
  p.registry = dir / "registry.json";
  auto ends_with = [](const std::string& s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file()) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    const std::string name = f.filename().string();
    if (ends_with(name, ".template.json")) p.templates.push_back(f);
    else if (ends_with(name, ".functional.json")) p.functional.push_back(f);
    else if (ends_with(name, ".deployment.json")) p.deployment.push_back(f);
  }
  return p;
}

/// Reads and decodes every file. Throws InputError on I/O or schema problems;
/// semantic problems are left to validate_bundle.
inline Bundle load_bundle(const BundlePaths& p) {
  Bundle b;
  b.catalog = parse_catalog(read_json(p.catalog));
  b.tenants = parse_registry(read_json(p.registry));
  for (const auto& t : p.templates) b.templates.push_back(parse_template(read_json(t)));
  for (const auto& f : p.functional) {
    auto reqs = parse_functional(read_json(f));
    b.functional.insert(b.functional.end(), reqs.begin(), reqs.end());
  }
  for (const auto& d : p.deployment) {
    auto cells = parse_deployment(read_json(d));
    b.deployment.insert(b.deployment.end(), cells.begin(), cells.end());
  }
  return b;
}

inline Bundle load_bundle(const std::filesystem::path& dir) { return load_bundle(bundle_paths(dir)); }

/// Writes the bundle in the directory layout read by bundle_paths.
inline void write_bundle(const Bundle& b, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  write_text(dir / "catalog.json", dump_catalog(b.catalog).dump(2) + "\n");
  write_text(dir / "registry.json", dump_registry(b.tenants).dump(2) + "\n");
  for (const auto& t : b.templates) {
    const std::string app = t.app.str();
    write_text(dir / (app + ".template.json"), dump_template(t).dump(2) + "\n");
    write_text(dir / (app + ".functional.json"), dump_functional(t.app, b.functional).dump(2) + "\n");
    write_text(dir / (app + ".deployment.json"), dump_deployment(t.app, b.deployment).dump(2) + "\n");
  }
}

/// All files of a bundle concatenated, for byte-level comparisons.
inline std::string serialize_bundle(const Bundle& b) {
  std::string out = dump_catalog(b.catalog).dump() + "\n" + dump_registry(b.tenants).dump() + "\n";
  for (const auto& t : b.templates) {
    out += dump_template(t).dump() + "\n";
    out += dump_functional(t.app, b.functional).dump() + "\n";
    out += dump_deployment(t.app, b.deployment).dump() + "\n";
  }
  return out;
}

}  // namespace rvcloud::io
