// Copyright 2026 The bibnli Authors.
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

#ifndef BIBNLI_ENTITY_HPP_
#define BIBNLI_ENTITY_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace bibnli {

// The five bibliographic entity types. The set is closed.
enum class EntityType { kPaper, kAuthor, kTerm, kSource, kOrganization };

inline constexpr std::size_t kNumEntityTypes = 5;

inline constexpr std::array<EntityType, kNumEntityTypes> kAllEntityTypes = {
    EntityType::kPaper, EntityType::kAuthor, EntityType::kTerm,
    EntityType::kSource, EntityType::kOrganization};

// "Paper", "Author", ...
std::string_view to_string(EntityType type);

// Inverse of to_string; also accepts lowercase names.
std::optional<EntityType> parse_entity_type(std::string_view name);

inline constexpr std::size_t index_of(EntityType type) {
  return static_cast<std::size_t>(type);
}

}  // namespace bibnli

#endif  // BIBNLI_ENTITY_HPP_
