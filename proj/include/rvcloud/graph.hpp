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
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rvcloud/errors.hpp"
#include "rvcloud/model.hpp"
#include "rvcloud/translate.hpp"

namespace rvcloud {

/// Undirected graph over tenants whose edges carry sets of variant labels.
/// Stored as one adjacency bitset per (variant, vertex); an edge {a,b}
/// carries label v iff b is in neighbors(v, a). Both endpoints of a
/// v-labeled edge participate in v, and there are no self-loops.
class LabeledGraph {
 public:
  LabeledGraph() = default;

  LabeledGraph(RvcId rvc, std::vector<TenantId> vertices, std::vector<VariantId> variants)
      : rvc_(std::move(rvc)), vertices_(std::move(vertices)), variants_(std::move(variants)) {
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i) vertex_pos_.emplace(vertices_[i], i);
    participants_.assign(variants_.size(), TenantSet(n));
    adjacency_.assign(variants_.size(), std::vector<TenantSet>(n, TenantSet(n)));
  }

  const RvcId& rvc() const noexcept { return rvc_; }
  const std::vector<TenantId>& vertices() const noexcept { return vertices_; }
  const std::vector<VariantId>& variants() const noexcept { return variants_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t variant_count() const noexcept { return variants_.size(); }

  std::optional<std::size_t> vertex_index(const TenantId& t) const {
    auto it = vertex_pos_.find(t);
    if (it == vertex_pos_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<std::size_t> variant_index(const VariantId& v) const {
    for (std::size_t i = 0; i < variants_.size(); ++i)
      if (variants_[i] == v) return i;
    return std::nullopt;
  }

  void add_participant(std::size_t vertex, std::size_t variant) {
    participants_.at(variant).set(vertex);
  }
  void add_participant(const TenantId& t, const VariantId& v) {
    add_participant(require_vertex(t), require_variant(v));
  }

  const TenantSet& participants(std::size_t variant) const { return participants_.at(variant); }

  bool participates(std::size_t vertex) const {
    for (const auto& p : participants_)
      if (p.test(vertex)) return true;
    return false;
  }

  void add_edge(std::size_t a, std::size_t b, std::size_t variant) {
    if (a == b) throw UsageError("self-loop on '" + vertices_.at(a).str() + "'");
    const auto& part = participants_.at(variant);
    if (!part.test(a) || !part.test(b))
      throw UsageError("edge {" + vertices_.at(a).str() + "," + vertices_.at(b).str() +
                       "} labeled '" + variants_[variant].str() +
                       "' between non-participants");
    adjacency_[variant][a].set(b);
    adjacency_[variant][b].set(a);
  }
  void add_edge(const TenantId& a, const TenantId& b, const VariantId& v) {
    add_edge(require_vertex(a), require_vertex(b), require_variant(v));
  }

  void remove_edge(std::size_t a, std::size_t b, std::size_t variant) {
    adjacency_.at(variant).at(a).reset(b);
    adjacency_[variant].at(b).reset(a);
  }

  bool has_edge(std::size_t a, std::size_t b, std::size_t variant) const {
    return adjacency_.at(variant).at(a).test(b);
  }

  /// Vertices adjacent to `vertex` along `variant`-labeled edges.
  const TenantSet& neighbors(std::size_t variant, std::size_t vertex) const {
    return adjacency_.at(variant).at(vertex);
  }

  /// Label positions on {a,b}, in variant order.
  std::vector<std::size_t> labels(std::size_t a, std::size_t b) const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < variants_.size(); ++v)
      if (adjacency_[v][a].test(b)) out.push_back(v);
    return out;
  }

  /// Variants both endpoints participate in.
  std::vector<std::size_t> shared_variants(std::size_t a, std::size_t b) const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < variants_.size(); ++v)
      if (participants_[v].test(a) && participants_[v].test(b)) out.push_back(v);
    return out;
  }

  std::size_t degree(std::size_t variant, std::size_t vertex) const {
    return adjacency_.at(variant).at(vertex).count();
  }

  /// Number of v-labeled edges.
  std::size_t edge_count(std::size_t variant) const {
    std::size_t twice = 0;
    for (const auto& row : adjacency_.at(variant)) twice += row.count();
    return twice / 2;
  }

  /// Every edge, keyed by the unordered pair with the lexicographically
  /// smaller id first; labels in variant order.
  std::map<std::pair<TenantId, TenantId>, std::vector<VariantId>> edges() const {
    std::map<std::pair<TenantId, TenantId>, std::vector<VariantId>> out;
    for (std::size_t v = 0; v < variants_.size(); ++v) {
      for (std::size_t a = 0; a < vertices_.size(); ++a) {
        const auto& row = adjacency_[v][a];
        for (auto b = row.find_next(a); b != TenantSet::npos; b = row.find_next(b)) {
          auto key = vertices_[a] < vertices_[b] ? std::make_pair(vertices_[a], vertices_[b])
                                                 : std::make_pair(vertices_[b], vertices_[a]);
          out[key].push_back(variants_[v]);
        }
      }
    }
    return out;
  }

  /// Per-variant complement restricted to each variant's participants.
  LabeledGraph complemented() const {
    LabeledGraph out(rvc_, vertices_, variants_);
    out.participants_ = participants_;
    for (std::size_t v = 0; v < variants_.size(); ++v) {
      const TenantSet& part = participants_[v];
      for (auto a = part.find_first(); a != TenantSet::npos; a = part.find_next(a)) {
        TenantSet row = part - adjacency_[v][a];
        row.reset(a);
        out.adjacency_[v][a] = std::move(row);
      }
    }
    return out;
  }

  friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;

 private:
  std::size_t require_vertex(const TenantId& t) const {
    if (auto i = vertex_index(t)) return *i;
    throw UsageError("unknown vertex '" + t.str() + "'");
  }
  std::size_t require_variant(const VariantId& v) const {
    if (auto i = variant_index(v)) return *i;
    throw UsageError("unknown variant '" + v.str() + "'");
  }

  RvcId rvc_;
  std::vector<TenantId> vertices_;
  std::vector<VariantId> variants_;
  std::unordered_map<TenantId, std::size_t> vertex_pos_;
  std::vector<TenantSet> participants_;
  std::vector<std::vector<TenantSet>> adjacency_;  // [variant][vertex]
};

/// Deployment-relationship graph of one RVC. Vertices are the tenants using
/// at least one variant, in registry order. {a,b} is labeled v iff both use v
/// and each allows the other on v.
inline LabeledGraph build_relationship_graph(const VariantRequirementTable& table) {
  TenantSet any(table.tenants.size());
  for (const auto& p : table.participants) any |= p;

  std::vector<std::size_t> vertex_of(table.tenants.size(), TenantSet::npos);
  std::vector<TenantId> vertices;
  for (auto t = any.find_first(); t != TenantSet::npos; t = any.find_next(t)) {
    vertex_of[t] = vertices.size();
    vertices.push_back(table.tenants[t]);
  }

  LabeledGraph g(table.rvc, std::move(vertices), table.variants);
  for (const auto& [key, cell] : table.cells) g.add_participant(vertex_of[key.first], key.second);

  std::vector<std::vector<const AllowedSet*>> allowed(
      table.variants.size(), std::vector<const AllowedSet*>(table.tenants.size(), nullptr));
  for (const auto& [key, cell] : table.cells) allowed[key.second][key.first] = &cell.allowed;

  for (std::size_t v = 0; v < table.variants.size(); ++v) {
    const TenantSet& part = table.participants[v];
    for (auto a = part.find_first(); a != TenantSet::npos; a = part.find_next(a)) {
      const TenantSet candidates = part & allowed[v][a]->members();
      for (auto b = candidates.find_next(a); b != TenantSet::npos; b = candidates.find_next(b)) {
        if (allowed[v][b]->allows(a)) g.add_edge(vertex_of[a], vertex_of[b], v);
      }
    }
  }
  return g;
}

/// Per-variant complement over that variant's participants. Vertices and
/// participation are unchanged, so complement(complement(g)) == g.
inline LabeledGraph complement(const LabeledGraph& g) { return g.complemented(); }

}  // namespace rvcloud
