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

#ifndef BIBNLI_SCHEMA_HPP_
#define BIBNLI_SCHEMA_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bibnli/entity.hpp"
#include "json.hpp"

namespace bibnli {

struct EdgeType {
  std::string label;
  EntityType source = EntityType::kPaper;
  EntityType target = EntityType::kPaper;

  friend bool operator==(const EdgeType&, const EdgeType&) = default;
};

// The bibliographic metamodel: entity types and directed edge types, in
// declaration order.
class Schema {
 public:
  // WRITES Author->Paper, CITES Paper->Paper, PUBLISHES Source->Paper,
  // HAS_TERM Paper->Term, AFFILIATED_WITH Author->Organization.
  static Schema default_schema();

  // {"edges": [{"label": "WRITES", "source": "Author", "target": "Paper"}]}
  // Throws DataError when a type is unknown, a label repeats, or an entity
  // type takes part in no edge.
  static Schema from_json(const nlohmann::json& doc);
  static Schema load(const std::filesystem::path& path);
  nlohmann::json to_json() const;

  const std::vector<EdgeType>& edges() const { return edges_; }

  // First declared edge with exactly this source and target type.
  const EdgeType* find_edge(EntityType source, EntityType target) const;
  const EdgeType* find_label(std::string_view label) const;

  // True when some edge joins the two types, in either direction.
  bool adjacent(EntityType a, EntityType b) const;

  // Type sequence [from, ..., to] of a shortest non-empty path over the
  // undirected edge graph. Among equally short paths the one found first
  // when edges are explored in declaration order wins.
  std::optional<std::vector<EntityType>> shortest_path(EntityType from,
                                                       EntityType to) const;

 private:
  explicit Schema(std::vector<EdgeType> edges);

  std::vector<EdgeType> edges_;
};

}  // namespace bibnli

#endif  // BIBNLI_SCHEMA_HPP_
