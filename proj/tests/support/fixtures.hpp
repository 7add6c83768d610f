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


// Shared datasets for the test programs.

#ifndef BIBNLI_TESTS_FIXTURES_HPP_
#define BIBNLI_TESTS_FIXTURES_HPP_

#include <cstdint>

#include "bibnli/graph_store.hpp"
#include "bibnli/lexicon.hpp"
#include "bibnli/schema.hpp"

namespace bibnli::testing {

constexpr std::uint64_t kSeed = 42;

const Schema& default_schema();

// Desk-scale synthetic graph for kSeed, built once.
const PropertyGraph& desk_graph();
const Dictionary& desk_dictionary();

}  // namespace bibnli::testing

#endif  // BIBNLI_TESTS_FIXTURES_HPP_
