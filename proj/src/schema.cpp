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

#include "bibnli/schema.hpp"

#include <array>
#include <deque>
#include <fstream>

#include "bibnli/error.hpp"

namespace bibnli {

Schema::Schema(std::vector<EdgeType> edges) : edges_(std::move(edges)) {
  std::array<bool, kNumEntityTypes> used{};
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const EdgeType& e = edges_[i];
    if (e.label.empty()) throw DataError("schema edge with empty label");
    for (std::size_t j = 0; j < i; ++j) {
      if (edges_[j].label == e.label) {
        throw DataError("duplicate schema edge label '" + e.label + "'");
      }
    }
    used[index_of(e.source)] = true;
    used[index_of(e.target)] = true;
  }
  for (EntityType t : kAllEntityTypes) {
    if (!used[index_of(t)]) {
      throw DataError("entity type " + std::string(to_string(t)) +
                      " is not connected by any schema edge");
    }
  }
}

Schema Schema::default_schema() {
  return Schema({
      {"WRITES", EntityType::kAuthor, EntityType::kPaper},
      {"CITES", EntityType::kPaper, EntityType::kPaper},
      {"PUBLISHES", EntityType::kSource, EntityType::kPaper},
      {"HAS_TERM", EntityType::kPaper, EntityType::kTerm},
      {"AFFILIATED_WITH", EntityType::kAuthor, EntityType::kOrganization},
  });
}

Schema Schema::from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("edges") || !doc["edges"].is_array()) {
    throw DataError("schema document needs an \"edges\" array");
  }
  std::vector<EdgeType> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_object() || !e.contains("label") || !e.contains("source") ||
        !e.contains("target")) {
      throw DataError("schema edge needs label, source and target");
    }
    auto source = parse_entity_type(e["source"].get<std::string>());
    auto target = parse_entity_type(e["target"].get<std::string>());
    if (!source || !target) {
      throw DataError("unknown entity type in schema edge " + e.dump());
    }
    edges.push_back({e["label"].get<std::string>(), *source, *target});
  }
  return Schema(std::move(edges));
}

Schema Schema::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open schema file " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw DataError("schema file " + path.string() + ": " + e.what());
  }
  return from_json(doc);
}

nlohmann::json Schema::to_json() const {
  nlohmann::json types = nlohmann::json::array();
  for (EntityType t : kAllEntityTypes) types.push_back(to_string(t));
  nlohmann::json edges = nlohmann::json::array();
  for (const EdgeType& e : edges_) {
    edges.push_back({{"label", e.label},
                     {"source", to_string(e.source)},
                     {"target", to_string(e.target)}});
  }
  return {{"node_types", types}, {"edges", edges}};
}

const EdgeType* Schema::find_edge(EntityType source, EntityType target) const {
  for (const EdgeType& e : edges_) {
    if (e.source == source && e.target == target) return &e;
  }
  return nullptr;
}

const EdgeType* Schema::find_label(std::string_view label) const {
  for (const EdgeType& e : edges_) {
    if (e.label == label) return &e;
  }
  return nullptr;
}

bool Schema::adjacent(EntityType a, EntityType b) const {
  return find_edge(a, b) != nullptr || find_edge(b, a) != nullptr;
}

std::optional<std::vector<EntityType>> Schema::shortest_path(
    EntityType from, EntityType to) const {
  constexpr std::size_t kNone = kNumEntityTypes;
  std::array<std::size_t, kNumEntityTypes> parent;
  parent.fill(kNone);
  std::array<bool, kNumEntityTypes> seen{};
  std::deque<EntityType> frontier;

  auto neighbours = [&](EntityType t) {
    std::vector<EntityType> out;
    for (const EdgeType& e : edges_) {
      if (e.source == t) out.push_back(e.target);
      if (e.target == t && e.source != e.target) out.push_back(e.source);
    }
    return out;
  };

  // The start is not marked seen so that from == to finds a cycle.
  for (EntityType n : neighbours(from)) {
    if (seen[index_of(n)]) continue;
    seen[index_of(n)] = true;
    parent[index_of(n)] = index_of(from);
    frontier.push_back(n);
  }
  while (!frontier.empty() && !seen[index_of(to)]) {
    EntityType t = frontier.front();
    frontier.pop_front();
    for (EntityType n : neighbours(t)) {
      if (seen[index_of(n)]) continue;
      seen[index_of(n)] = true;
      parent[index_of(n)] = index_of(t);
      frontier.push_back(n);
    }
  }
  if (!seen[index_of(to)]) return std::nullopt;

  std::vector<EntityType> path{to};
  std::size_t cur = parent[index_of(to)];
  while (true) {
    EntityType t = kAllEntityTypes[cur];
    path.push_back(t);
    if (t == from && path.size() > 1) break;
    cur = parent[cur];
    if (cur == kNone) break;
  }
  return std::vector<EntityType>(path.rbegin(), path.rend());
}

}  // namespace bibnli
