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
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "rvcloud/rvcloud.hpp"

namespace rvtest {

using namespace rvcloud;

inline std::string fixture(const std::string& name) { return std::string(RVCLOUD_FIXTURES) + "/" + name; }

inline Bundle load_fixture(const std::string& name) { return io::load_bundle(fixture(name)); }

inline std::vector<TenantId> tenant_ids(std::initializer_list<const char*> ids) {
  std::vector<TenantId> out;
  for (auto s : ids) out.emplace_back(s);
  return out;
}

inline std::vector<VariantId> variant_ids(std::initializer_list<const char*> ids) {
  std::vector<VariantId> out;
  for (auto s : ids) out.emplace_back(s);
  return out;
}

/// Graph with named tenants T1..Tn and variants V1..Vk; every tenant in
/// `participation[v]` participates in variant v.
struct GraphSpec {
  std::size_t tenants = 0;
  std::size_t variants = 1;
  std::vector<std::vector<std::size_t>> participation;               // per variant
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> edges;  // (a, b, variant)
};

inline std::string tname(std::size_t i) { return "T" + std::to_string(i + 1); }
inline std::string vname(std::size_t i) { return "V" + std::to_string(i + 1); }

inline LabeledGraph make_graph(const GraphSpec& s, const std::string& rvc = "R") {
  std::vector<TenantId> vs;
  std::vector<VariantId> vars;
  for (std::size_t i = 0; i < s.tenants; ++i) vs.emplace_back(tname(i));
  for (std::size_t i = 0; i < s.variants; ++i) vars.emplace_back(vname(i));
  LabeledGraph g(RvcId(rvc), vs, vars);
  for (std::size_t v = 0; v < s.participation.size(); ++v)
    for (auto t : s.participation[v]) g.add_participant(t, v);
  for (auto [a, b, v] : s.edges) g.add_edge(a, b, v);
  return g;
}

/// Random labeled graph: each tenant joins each variant with probability
/// `join`, each pair of participants of a variant is adjacent with
/// probability `density`.
inline LabeledGraph random_graph(std::mt19937_64& rng, std::size_t tenants, std::size_t variants, double join,
                                 double density) {
  std::bernoulli_distribution j(join), e(density);
  GraphSpec s{tenants, variants, std::vector<std::vector<std::size_t>>(variants), {}};
  for (std::size_t v = 0; v < variants; ++v) {
    for (std::size_t t = 0; t < tenants; ++t)
      if (j(rng)) s.participation[v].push_back(t);
    const auto& p = s.participation[v];
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = a + 1; b < p.size(); ++b)
        if (e(rng)) s.edges.emplace_back(p[a], p[b], v);
  }
  return make_graph(s);
}

/// Every (tenant, variant) participation, tenant-major in vertex order.
inline std::vector<std::pair<std::size_t, std::size_t>> usages(const LabeledGraph& g) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t t = 0; t < g.vertex_count(); ++t)
    for (std::size_t v = 0; v < g.variant_count(); ++v)
      if (g.participants(v).test(t)) out.emplace_back(t, v);
  return out;
}

/// Independent restatement of the shared-pool admission rule: usage (B, V)
/// may not sit in a class that also holds any usage of a tenant A that
/// precedes B in vertex order and is a V-neighbor of B.
inline bool oracle_valid_shared(const LabeledGraph& g, const std::vector<std::pair<std::size_t, std::size_t>>& use,
                                const std::vector<int>& color) {
  for (std::size_t i = 0; i < use.size(); ++i)
    for (std::size_t j = 0; j < use.size(); ++j) {
      if (color[i] != color[j]) continue;
      auto [a, va] = use[i];
      auto [b, vb] = use[j];
      if (a < b && g.has_edge(a, b, vb)) return false;
    }
  return true;
}

/// Minimum class count by enumerating every set partition of the usages
/// (restricted growth strings). Only for small inputs.
inline std::size_t oracle_min_shared(const LabeledGraph& g) {
  const auto use = usages(g);
  if (use.empty()) return 0;
  std::size_t best = use.size();
  std::vector<int> color(use.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int used) {
    if (static_cast<std::size_t>(used) >= best) return;
    if (i == use.size()) {
      if (oracle_valid_shared(g, use, color)) best = static_cast<std::size_t>(used);
      return;
    }
    for (int c = 0; c <= used; ++c) {
      color[i] = c;
      rec(i + 1, std::max(used, c + 1));
    }
  };
  rec(0, 0);
  return best;
}

/// Chromatic number of one variant's conflict subgraph by enumeration.
inline std::size_t oracle_chromatic(const LabeledGraph& g, std::size_t v) {
  std::vector<std::size_t> p;
  for (std::size_t t = 0; t < g.vertex_count(); ++t)
    if (g.participants(v).test(t)) p.push_back(t);
  if (p.empty()) return 0;
  for (std::size_t k = 1; k <= p.size(); ++k) {
    std::vector<std::size_t> c(p.size(), 0);
    std::function<bool(std::size_t)> rec = [&](std::size_t i) {
      if (i == p.size()) return true;
      for (std::size_t x = 0; x < k; ++x) {
        bool ok = true;
        for (std::size_t j = 0; j < i && ok; ++j)
          if (c[j] == x && g.has_edge(p[i], p[j], v)) ok = false;
        if (!ok) continue;
        c[i] = x;
        if (rec(i + 1)) return true;
      }
      return false;
    };
    if (rec(0)) return k;
  }
  return p.size();
}

inline std::size_t oracle_min_per_variant(const LabeledGraph& g) {
  std::size_t total = 0;
  for (std::size_t v = 0; v < g.variant_count(); ++v) total += oracle_chromatic(g, v);
  return total;
}

/// Structural check of a DOT document against the undirected subset of the
/// DOT grammar: graph header, node and edge statements with attribute lists.
/// Returns an empty string when valid, otherwise a description.
inline std::string dot_problem(const std::string& text) {
  std::vector<std::string> tok;
  for (std::size_t i = 0; i < text.size();) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '"') {
      std::size_t j = i + 1;
      while (j < text.size() && text[j] != '"') j += text[j] == '\\' ? 2 : 1;
      if (j >= text.size()) return "unterminated string";
      tok.push_back(text.substr(i, j - i + 1));
      i = j + 1;
    } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      tok.push_back(text.substr(i, j - i));
      i = j;
    } else if (text.compare(i, 2, "--") == 0 || text.compare(i, 2, "->") == 0) {
      tok.push_back(text.substr(i, 2));
      i += 2;
    } else if (std::string("{}[]=;,").find(c) != std::string::npos) {
      tok.emplace_back(1, c);
      ++i;
    } else {
      return std::string("unexpected character '") + c + "'";
    }
  }
  auto is_id = [](const std::string& t) {
    return !t.empty() && (t[0] == '"' || std::isalnum(static_cast<unsigned char>(t[0])) || t[0] == '_');
  };
  std::size_t p = 0;
  auto at = [&](const char* s) { return p < tok.size() && tok[p] == s; };
  if (at("strict")) ++p;
  if (!at("graph")) return "expected 'graph'";
  ++p;
  if (p < tok.size() && is_id(tok[p])) ++p;
  if (!at("{")) return "expected '{'";
  ++p;
  std::set<std::string> nodes;
  while (p < tok.size() && !at("}")) {
    if (!is_id(tok[p])) return "expected statement at token '" + tok[p] + "'";
    std::string first = tok[p++];
    if (at("->")) return "directed edge in undirected graph";
    if (at("--")) {
      ++p;
      if (p >= tok.size() || !is_id(tok[p])) return "expected edge target";
      if (!nodes.count(first) || !nodes.count(tok[p])) return "edge endpoint not declared";
      ++p;
    } else {
      nodes.insert(first);
    }
    if (at("[")) {
      ++p;
      while (p < tok.size() && !at("]")) {
        if (!is_id(tok[p])) return "expected attribute name";
        ++p;
        if (!at("=")) return "expected '='";
        ++p;
        if (p >= tok.size() || !is_id(tok[p])) return "expected attribute value";
        ++p;
        if (at(",") || at(";")) ++p;
      }
      if (!at("]")) return "unterminated attribute list";
      ++p;
    }
    if (at(";")) ++p;
  }
  if (!at("}")) return "expected '}'";
  if (p + 1 != tok.size()) return "trailing tokens";
  return {};
}

}  // namespace rvtest
