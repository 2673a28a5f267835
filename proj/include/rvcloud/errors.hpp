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
#include <stdexcept>
#include <string>

namespace rvcloud {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed sharing expression. `offset` is the 0-based character position
/// in the original text where parsing failed.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A tenant reference that does not exist in the registry.
class ResolutionError : public Error {
 public:
  using Error::Error;
};

/// An API was called outside of its contract (mismatched declarers, orders
/// that are not permutations, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Thrown by the exact solver when the instance exceeds its tenant limit.
class InstanceTooLarge : public Error {
 public:
  InstanceTooLarge(std::size_t tenants, std::size_t limit)
      : Error("exact solver limit exceeded: " + std::to_string(tenants) +
              " participating tenants > limit " + std::to_string(limit)),
        tenants_(tenants),
        limit_(limit) {}
  std::size_t tenants() const noexcept { return tenants_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t tenants_;
  std::size_t limit_;
};

/// Consistency failures in an otherwise well-formed plan: missing colorings,
/// coverage gaps.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// File could not be read or its JSON could not be decoded into the schema.
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace rvcloud
