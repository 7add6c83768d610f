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


#include "bibnli/emitter.hpp"

namespace bibnli {

UnsupportedDialect::UnsupportedDialect(std::string_view dialect)
    : std::invalid_argument("unsupported dialect '" + std::string(dialect) +
                            "'; supported: cypher") {}

std::vector<std::string> supported_dialects() { return {"cypher"}; }

std::string quote_string(std::string_view value) {
  std::string out = "\"";
  for (char c : value) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

EmittedQuery emit(const GraphQuery& query, std::string_view dialect) {
  if (dialect != "cypher") throw UnsupportedDialect(dialect);

  std::vector<bool> declared(query.nodes.size(), false);
  auto node = [&](std::size_t i) {
    const GraphNode& n = query.nodes[i];
    std::string out = "(" + n.instance;
    if (!declared[i]) {
      out += ":";
      out += to_string(n.type);
      declared[i] = true;
    }
    return out + ")";
  };

  std::vector<std::string> patterns;
  for (const GraphRelation& r : query.relations) {
    std::string p = node(r.source);
    p += "-[:" + r.label + "]->";
    p += node(r.target);
    patterns.push_back(std::move(p));
  }
  for (std::size_t i = 0; i < query.nodes.size(); ++i) {
    if (!declared[i]) patterns.push_back(node(i));
  }

  std::string text = "MATCH ";
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    if (i > 0) text += ",\n      ";
    text += patterns[i];
  }
  bool first = true;
  for (const GraphNode& n : query.nodes) {
    if (!n.constraint) continue;
    text += first ? "\nWHERE " : "\n  AND ";
    text += n.instance + ".name = " + quote_string(*n.constraint);
    first = false;
  }
  text += "\nRETURN DISTINCT " + query.nodes[query.answer()].instance;
  return {std::move(text), "cypher"};
}

}  // namespace bibnli
