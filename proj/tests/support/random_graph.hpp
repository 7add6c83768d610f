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


// Random datasets and graph queries for differential tests.

#ifndef BIBNLI_TESTS_RANDOM_GRAPH_HPP_
#define BIBNLI_TESTS_RANDOM_GRAPH_HPP_

#include <cstddef>
#include <random>

#include "bibnli/graph_store.hpp"
#include "bibnli/query_graph.hpp"
#include "bibnli/schema.hpp"

namespace bibnli::testing {

// Entity names come from a pool of six per type, so constraints hit
// repeated names. Edges are schema-conformant and distinct.
Dataset random_dataset(std::mt19937_64& rng, const Schema& schema,
                       std::size_t entities, std::size_t edges);

// Grows a query one relation at a time from a random start node. Some
// relations join two existing nodes, possibly repeating a relation.
GraphQuery random_query(std::mt19937_64& rng, const Schema& schema);

}  // namespace bibnli::testing

#endif  // BIBNLI_TESTS_RANDOM_GRAPH_HPP_
