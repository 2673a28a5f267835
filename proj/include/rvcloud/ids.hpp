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

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

namespace rvcloud {

/// Opaque string identifier, tagged so that tenant ids cannot be passed where
/// variant ids are expected.
template <typename Tag>
class Id {
 public:
  Id() = default;
  explicit Id(std::string value) : value_(std::move(value)) {}
  explicit Id(std::string_view value) : value_(value) {}
  explicit Id(const char* value) : value_(value) {}

  const std::string& str() const noexcept { return value_; }
  bool empty() const noexcept { return value_.empty(); }

  friend bool operator==(const Id&, const Id&) = default;
  friend auto operator<=>(const Id&, const Id&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Id& id) { return os << id.value_; }

 private:
  std::string value_;
};

struct TenantTag {};
struct RvcTag {};
struct VariantTag {};
struct FunctionalityTag {};
struct AppTag {};

using TenantId = Id<TenantTag>;
using RvcId = Id<RvcTag>;
using VariantId = Id<VariantTag>;
using FunctionalityId = Id<FunctionalityTag>;
using AppId = Id<AppTag>;

}  // namespace rvcloud

template <typename Tag>
struct std::hash<rvcloud::Id<Tag>> {
  std::size_t operator()(const rvcloud::Id<Tag>& id) const noexcept {
    return std::hash<std::string>{}(id.str());
  }
};
