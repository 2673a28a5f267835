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

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "rvcloud/graph.hpp"

namespace rvcloud {

enum class GraphKind { relationship, conflict };

inline std::string_view to_string(GraphKind k) {
  return k == GraphKind::relationship ? "relationship" : "conflict";
}

namespace detail {

inline std::string dot_id(std::string_view s) {
  bool plain = !s.empty() && !std::isdigit(static_cast<unsigned char>(s.front()));
  for (char c : s) plain = plain && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
  if (plain) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

/// Undirected DOT rendering. Vertices in graph order, edges in canonical pair
/// order. An edge carrying every variant its endpoints share gets no label.
inline std::string export_dot(const LabeledGraph& g, GraphKind kind) {
  std::string out = "graph " + detail::dot_id(g.rvc().str() + "_" + std::string(to_string(kind))) + " {\n";
  for (const auto& v : g.vertices()) out += "  " + detail::dot_id(v.str()) + ";\n";
  for (const auto& [pair, labels] : g.edges()) {
    out += "  " + detail::dot_id(pair.first.str()) + " -- " + detail::dot_id(pair.second.str());
    const auto a = *g.vertex_index(pair.first);
    const auto b = *g.vertex_index(pair.second);
    if (labels.size() != g.shared_variants(a, b).size()) {
      std::string text;
      for (const auto& l : labels) text += (text.empty() ? "" : ",") + l.str();
      std::string escaped;
      for (char c : text) {
        if (c == '"' || c == '\\') escaped += '\\';
        escaped += c;
      }
      out += " [label=\"" + escaped + "\"]";
    }
    out += ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace rvcloud
