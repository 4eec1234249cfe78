// Copyright 2026 The skrates Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SKRATES_CONFIG_HPP_
#define SKRATES_CONFIG_HPP_

#include <cstdlib>
#include <string>

#include "skrates/error.hpp"

namespace skrates {

inline constexpr std::size_t kDefaultEnumerationCap = 10;

// Largest vertex subset for which partition-based enumeration is allowed.
// SKRATES_MAX_VERTICES overrides the default.
inline std::size_t enumeration_cap() {
  if (const char* env = std::getenv("SKRATES_MAX_VERTICES"); env != nullptr && *env != '\0') {
    try {
      const long value = std::stol(env);
      if (value >= 2) return static_cast<std::size_t>(value);
    } catch (const std::exception&) {
    }
    throw InputError(std::string("SKRATES_MAX_VERTICES must be an integer >= 2, got '") + env + "'");
  }
  return kDefaultEnumerationCap;
}

inline void require_within_cap(std::size_t size, std::size_t cap, const char* what) {
  if (size > cap) {
    throw CapExceededError(std::string(what) + ": " + std::to_string(size) + " vertices exceeds the cap of " +
                           std::to_string(cap) + " (set SKRATES_MAX_VERTICES to raise it)");
  }
}

}  // namespace skrates

#endif  // SKRATES_CONFIG_HPP_
