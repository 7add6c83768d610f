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


#ifndef BIBNLI_EMITTER_HPP_
#define BIBNLI_EMITTER_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bibnli/query_graph.hpp"

namespace bibnli {

struct EmittedQuery {
  std::string text;
  std::string dialect;
};

class UnsupportedDialect : public std::invalid_argument {
 public:
  explicit UnsupportedDialect(std::string_view dialect);
};

std::vector<std::string> supported_dialects();

// MATCH (a:Author)-[:WRITES]->(b:Paper), ...
// WHERE a.name = "John"
// RETURN DISTINCT b
//
// One edge pattern per relation in relation order, then the nodes no
// relation touches. A node's label is written at its first occurrence only.
EmittedQuery emit(const GraphQuery& query, std::string_view dialect = "cypher");

// Double-quoted string literal with backslash escapes for '"' and '\'.
std::string quote_string(std::string_view value);

}  // namespace bibnli

#endif  // BIBNLI_EMITTER_HPP_
