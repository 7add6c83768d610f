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


// Reader for the Cypher subset produced by the emitter (see
// docs/cypher_subset.md), turning query text back into a GraphQuery.

#ifndef BIBNLI_CYPHER_READER_HPP_
#define BIBNLI_CYPHER_READER_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

#include "bibnli/query_graph.hpp"

namespace bibnli {

class CypherSyntaxError : public std::runtime_error {
 public:
  CypherSyntaxError(const std::string& message, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Variables become nodes in order of first appearance. Part and class flags
// are recovered from variable names of the form the compiler assigns;
// other names yield main-part nodes. Throws CypherSyntaxError.
GraphQuery read_cypher(std::string_view text);

}  // namespace bibnli

#endif  // BIBNLI_CYPHER_READER_HPP_
