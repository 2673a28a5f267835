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
#include <string>
#include <utility>
#include <vector>

#include "rvcloud/errors.hpp"
#include "rvcloud/expression.hpp"
#include "rvcloud/model.hpp"

namespace rvcloud {

/// The set of tenants a declarer permits to co-reside with it. Every sharing
/// expression reduces to one of these; the declarer is never a member.
class AllowedSet {
 public:
  AllowedSet() = default;
  AllowedSet(std::size_t declarer, TenantSet allowed)
      : declarer_(declarer), allowed_(std::move(allowed)) {
    if (declarer_ < allowed_.size()) allowed_.reset(declarer_);
  }

  static AllowedSet everyone(const Registry& reg, std::size_t declarer) {
    return {declarer, reg.everyone_but(declarer)};
  }
  static AllowedSet nobody(const Registry& reg, std::size_t declarer) {
    return {declarer, reg.empty_set()};
  }

  std::size_t declarer() const noexcept { return declarer_; }
  const TenantSet& members() const noexcept { return allowed_; }
  std::size_t universe() const noexcept { return allowed_.size(); }
  bool allows(std::size_t tenant) const { return tenant < allowed_.size() && allowed_.test(tenant); }
  std::size_t count() const { return allowed_.count(); }

  bool is_nobody() const { return allowed_.none(); }
  bool is_everyone() const {
    return allowed_.size() == 0 || allowed_.count() + 1 == allowed_.size();
  }

  friend bool operator==(const AllowedSet&, const AllowedSet&) = default;

 private:
  std::size_t declarer_ = 0;
  TenantSet allowed_;
};

/// Intersection of two allowed sets of the same declarer. Reproduces every
/// transition rule (SWA is the identity, DSWA absorbs, DSW targets union, SWJ
/// targets intersect, DSW(X) with SWJ(Y) keeps Y minus X), and is
/// commutative, associative and idempotent.
inline AllowedSet combine(const AllowedSet& a, const AllowedSet& b) {
  if (a.declarer() != b.declarer())
    throw UsageError("combine: declarer mismatch (" + std::to_string(a.declarer()) + " vs " +
                     std::to_string(b.declarer()) + ")");
  if (a.universe() != b.universe()) throw UsageError("combine: registry size mismatch");
  return {a.declarer(), a.members() & b.members()};
}

/// Expression after symbolic references have been expanded against the
/// declarer's relations. Targets never contain the declarer, and the
/// normal forms hold: SWJ with no target is DSWAny, DSW with no target is SWAny.
struct ResolvedExpression {
  ExpressionKind kind = ExpressionKind::share_any;
  std::size_t declarer = 0;
  TenantSet targets;

  AllowedSet allowed(const Registry& reg) const {
    switch (kind) {
      case ExpressionKind::share_any:
        return AllowedSet::everyone(reg, declarer);
      case ExpressionKind::dont_share_any:
        return AllowedSet::nobody(reg, declarer);
      case ExpressionKind::share_just:
        return {declarer, targets};
      case ExpressionKind::dont_share:
        return {declarer, reg.everyone_but(declarer) - targets};
    }
    return {};
  }

  friend bool operator==(const ResolvedExpression&, const ResolvedExpression&) = default;
};

namespace detail {

inline ResolvedExpression normalized(ResolvedExpression e) {
  if (e.kind == ExpressionKind::share_just && e.targets.none()) {
    e.kind = ExpressionKind::dont_share_any;  // SWJ(0) -> DSWA
  } else if (e.kind == ExpressionKind::dont_share && e.targets.none()) {
    e.kind = ExpressionKind::share_any;  // DSW(0) -> SWA
  }
  if (e.kind == ExpressionKind::share_any || e.kind == ExpressionKind::dont_share_any)
    e.targets.reset();
  return e;
}

}  // namespace detail

/// Expands P / Cp / tenant refs relative to `declarer`. Throws ResolutionError
/// for unknown tenant ids. A self-reference is dropped.
inline ResolvedExpression resolve_form(const SharingExpression& expr, std::size_t declarer,
                                       const Registry& reg) {
  if (declarer >= reg.size())
    throw ResolutionError("declarer index " + std::to_string(declarer) + " not in registry");
  ResolvedExpression out{expr.kind, declarer, reg.empty_set()};
  for (const auto& ref : expr.targets) {
    switch (ref.kind) {
      case SymbolicRef::Kind::partners:
        out.targets |= reg.partners(declarer);
        break;
      case SymbolicRef::Kind::competitors:
        out.targets |= reg.competitors(declarer);
        break;
      case SymbolicRef::Kind::specific:
        out.targets.set(reg.index(ref.tenant));
        break;
    }
  }
  out.targets.reset(declarer);
  return detail::normalized(std::move(out));
}

inline AllowedSet resolve(const SharingExpression& expr, std::size_t declarer,
                          const Registry& reg) {
  return resolve_form(expr, declarer, reg).allowed(reg);
}

inline AllowedSet resolve(const SharingExpression& expr, const TenantId& declarer,
                          const Registry& reg) {
  return resolve(expr, reg.index(declarer), reg);
}

/// One step of folding two expressions of the same declarer, carried out on
/// expression forms instead of sets. `rule` names the transition applied.
struct FoldStep {
  ResolvedExpression result;
  std::string rule;
};

/// Transition-rule algebra on forms. Its allowed set always equals
/// combine(a.allowed(), b.allowed()); it exists so that explanations can name
/// the rule that fired.
inline FoldStep combine_forms(const ResolvedExpression& a, const ResolvedExpression& b) {
  if (a.declarer != b.declarer) throw UsageError("combine_forms: declarer mismatch");
  using K = ExpressionKind;
  FoldStep step;
  step.result.declarer = a.declarer;
  step.result.targets = TenantSet(a.targets.size());

  auto with_norm = [&step](ResolvedExpression r, std::string rule) {
    ResolvedExpression n = detail::normalized(r);
    if (n.kind != r.kind) {
      rule += r.kind == K::share_just ? "; SWJ(0) -> DSWA" : "; DSW(0) -> SWA";
    }
    step.result = std::move(n);
    step.rule = std::move(rule);
    return step;
  };

  if (a.kind == K::share_any) return with_norm(b, "SWA / Z -> Z");
  if (b.kind == K::share_any) return with_norm(a, "Z / SWA -> Z");
  if (a.kind == K::dont_share_any || b.kind == K::dont_share_any) {
    step.result.kind = K::dont_share_any;
    step.rule = "DSWA / Z -> DSWA";
    return step;
  }
  if (a.kind == K::dont_share && b.kind == K::dont_share)
    return with_norm({K::dont_share, a.declarer, a.targets | b.targets},
                     "DSW(X) / DSW(Y) -> DSW(X,Y)");
  if (a.kind == K::share_just && b.kind == K::share_just) {
    TenantSet both = a.targets & b.targets;
    std::string rule = both.none() ? "SWJ(X) / SWJ(Y) -> DSWA" : "SWJ(X) / SWJ(Y) -> SWJ(X∩Y)";
    step.result = {both.none() ? K::dont_share_any : K::share_just, a.declarer, std::move(both)};
    step.result = detail::normalized(step.result);
    step.rule = std::move(rule);
    return step;
  }
  // One DSW, one SWJ.
  const ResolvedExpression& dsw = a.kind == K::dont_share ? a : b;
  const ResolvedExpression& swj = a.kind == K::dont_share ? b : a;
  TenantSet kept = swj.targets - dsw.targets;
  std::string rule;
  if (kept.none())
    rule = "DSW(X) / SWJ(X) -> DSWA";
  else if (kept == swj.targets)
    rule = "DSW(X) / SWJ(Y) -> SWJ(Y)";
  else
    rule = "DSW(X) / SWJ(Y) -> SWJ(Y\\X)";
  step.result = detail::normalized({K::share_just, a.declarer, std::move(kept)});
  step.rule = std::move(rule);
  return step;
}

/// Shortest expression with the given allowed set: SWAny, DSWAny, or whichever
/// of SWJ(allowed) / DSW(others minus allowed) lists fewer tenants (SWJ on ties).
inline SharingExpression canonical_expression(const AllowedSet& s, const Registry& reg) {
  if (s.is_nobody()) return SharingExpression::dont_share_any();
  if (s.is_everyone()) return SharingExpression::share_any();
  const TenantSet excluded = reg.everyone_but(s.declarer()) - s.members();
  const bool use_swj = s.members().count() <= excluded.count();
  const TenantSet& listed = use_swj ? s.members() : excluded;
  std::set<SymbolicRef> targets;
  for (auto i = listed.find_first(); i != TenantSet::npos; i = listed.find_next(i))
    targets.insert(SymbolicRef::specific(reg.id(i)));
  return use_swj ? SharingExpression::share_just(std::move(targets))
                 : SharingExpression::dont_share(std::move(targets));
}

inline std::string render(const AllowedSet& s, const Registry& reg) {
  return render(canonical_expression(s, reg));
}

/// Members as tenant ids in registry order.
inline std::vector<TenantId> member_ids(const TenantSet& set, const Registry& reg) {
  std::vector<TenantId> out;
  for (auto i = set.find_first(); i != TenantSet::npos; i = set.find_next(i))
    out.push_back(reg.id(i));
  return out;
}

}  // namespace rvcloud
