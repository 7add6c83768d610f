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


// The forty test queries used to evaluate the interface, the named entities
// they mention, and their hand-derived graph queries.

#ifndef BIBNLI_QUERY_SUITE_HPP_
#define BIBNLI_QUERY_SUITE_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bibnli/cnl_parser.hpp"
#include "bibnli/entity.hpp"
#include "bibnli/lexicon.hpp"
#include "bibnli/query_graph.hpp"

namespace bibnli {

struct SuiteQuery {
  int number = 0;
  std::string text;
  std::size_t entity_count = 0;  // named entities, class mentions included
};

std::span<const SuiteQuery> suite_queries();
const SuiteQuery& suite_query(int number);

// Every instance named by some suite query, without duplicates.
std::vector<DatasetRecord> suite_entities();

struct GoldNode {
  EntityType type = EntityType::kPaper;
  Part part = Part::kMain;
  bool answer = false;
  std::optional<std::string> constraint;

  friend bool operator==(const GoldNode&, const GoldNode&) = default;
};

struct GoldRelation {
  std::size_t source = 0;
  std::size_t target = 0;
  std::string label;
};

struct GoldQuery {
  std::vector<GoldNode> nodes;
  std::vector<GoldRelation> relations;
};

// Compact form: "?P | cited:A=Name ; 1 WRITES 0". Letters P, A, T, S, O name
// the entity types, "?" marks the answer, "=" a constraint.
GoldQuery parse_gold(std::string_view spec);

GoldQuery gold_query(int number);

// Nodes and relations with instance names assigned as compile does.
GraphQuery to_graph_query(const GoldQuery& gold);

// True when some bijection between the nodes maps (type, part, answer,
// constraint) onto equal keys and the labeled relation multisets onto each
// other.
bool matches_gold(const GraphQuery& query, const GoldQuery& gold);

}  // namespace bibnli

#endif  // BIBNLI_QUERY_SUITE_HPP_
