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
#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <utility>

#include "rvcloud/errors.hpp"
#include "rvcloud/ids.hpp"

namespace rvcloud {

/// The four deployment-requirement forms a tenant can state per functionality.
enum class ExpressionKind {
  share_any,       // SWAny
  share_just,      // SWJ(X)
  dont_share,      // DSW(X)
  dont_share_any,  // DSWAny
};

/// Target of SWJ/DSW: the declarer's partners, its competitors, or one tenant.
struct SymbolicRef {
  enum class Kind { partners, competitors, specific };

  Kind kind = Kind::specific;
  TenantId tenant;  // only meaningful for Kind::specific

  static SymbolicRef partners() { return {Kind::partners, {}}; }
  static SymbolicRef competitors() { return {Kind::competitors, {}}; }
  static SymbolicRef specific(TenantId t) { return {Kind::specific, std::move(t)}; }

  friend bool operator==(const SymbolicRef&, const SymbolicRef&) = default;
  friend auto operator<=>(const SymbolicRef&, const SymbolicRef&) = default;
};

struct SharingExpression {
  ExpressionKind kind = ExpressionKind::share_any;
  std::set<SymbolicRef> targets;  // empty for SWAny / DSWAny

  static SharingExpression share_any() { return {ExpressionKind::share_any, {}}; }
  static SharingExpression dont_share_any() { return {ExpressionKind::dont_share_any, {}}; }
  static SharingExpression share_just(std::set<SymbolicRef> t) {
    return {ExpressionKind::share_just, std::move(t)};
  }
  static SharingExpression dont_share(std::set<SymbolicRef> t) {
    return {ExpressionKind::dont_share, std::move(t)};
  }

  friend bool operator==(const SharingExpression&, const SharingExpression&) = default;
};

inline std::string render(const SymbolicRef& r) {
  switch (r.kind) {
    case SymbolicRef::Kind::partners:
      return "P";
    case SymbolicRef::Kind::competitors:
      return "Cp";
    case SymbolicRef::Kind::specific:
      return r.tenant.str();
  }
  return {};
}

/// Canonical text form; parse_expression(render(e)) == e.
inline std::string render(const SharingExpression& e) {
  auto list = [&](const char* head) {
    std::string s = head;
    s += '(';
    bool first = true;
    for (const auto& t : e.targets) {
      if (!first) s += ',';
      s += render(t);
      first = false;
    }
    s += ')';
    return s;
  };
  switch (e.kind) {
    case ExpressionKind::share_any:
      return "SWAny";
    case ExpressionKind::dont_share_any:
      return "DSWAny";
    case ExpressionKind::share_just:
      return list("SWJ");
    case ExpressionKind::dont_share:
      return list("DSW");
  }
  return {};
}

namespace detail {

inline bool is_id_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' ||
         c == ':' || c == '@' || c == '/';
}

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  SharingExpression parse() {
    skip_ws();
    const std::size_t kw_start = pos_;
    std::string_view kw = identifier();
    if (kw.empty()) fail("expected SWAny, DSWAny, SWJ or DSW");

    SharingExpression e;
    if (kw == "SWAny") {
      e.kind = ExpressionKind::share_any;
    } else if (kw == "DSWAny") {
      e.kind = ExpressionKind::dont_share_any;
    } else if (kw == "SWJ" || kw == "DSW") {
      e.kind = kw == "SWJ" ? ExpressionKind::share_just : ExpressionKind::dont_share;
      e.targets = target_list();
    } else {
      pos_ = kw_start;
      fail("unknown expression keyword '" + std::string(kw) + "'");
    }
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  std::set<SymbolicRef> target_list() {
    skip_ws();
    expect('(');
    std::set<SymbolicRef> targets;
    skip_ws();
    if (peek() == ')') fail("empty target list");
    for (;;) {
      skip_ws();
      std::string_view tok = identifier();
      if (tok.empty()) fail("expected P, Cp or a tenant id");
      if (tok == "P")
        targets.insert(SymbolicRef::partners());
      else if (tok == "Cp")
        targets.insert(SymbolicRef::competitors());
      else
        targets.insert(SymbolicRef::specific(TenantId(tok)));
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect(')');
      return targets;
    }
  }

  std::string_view identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_id_char(text_[pos_])) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `SWAny | DSWAny | SWJ(ref,...) | DSW(ref,...)`. Refs are `P`, `Cp`
/// or tenant ids; duplicates collapse. Throws ParseError with the offset of
/// the first offending character.
inline SharingExpression parse_expression(std::string_view text) {
  return detail::ExpressionParser(text).parse();
}

}  // namespace rvcloud
