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


#include <algorithm>
#include <string>
#include <tuple>
#include <vector>

#include "bibnli/query_suite.hpp"
#include "bibnli/cypher_reader.hpp"
#include "bibnli/emitter.hpp"
#include "doctest.h"

using namespace bibnli;

namespace {

const Schema& schema() {
  static const Schema s = Schema::default_schema();
  return s;
}

const Dictionary& dictionary() {
  static const Dictionary d = build_dictionary(suite_entities());
  return d;
}

GraphQuery cited_by_john() {
  std::vector<DatasetRecord> records = {{EntityType::kAuthor, "John"}};
  return compile("authors that were cited by John", build_dictionary(records),
                 schema());
}

// Order-independent view of a query keyed by instance names.
using NodeKey = std::tuple<std::string, EntityType, Part, bool, bool,
                           std::optional<std::string>>;

std::pair<std::vector<NodeKey>, std::vector<std::string>> canonical(
    const GraphQuery& q) {
  std::vector<NodeKey> nodes;
  for (const GraphNode& n : q.nodes) {
    nodes.emplace_back(n.instance, n.type, n.part, n.is_class, n.answer,
                       n.constraint);
  }
  std::vector<std::string> rels;
  for (const GraphRelation& r : q.relations) {
    rels.push_back(q.nodes[r.source].instance + " " + r.label + " " +
                   q.nodes[r.target].instance);
  }
  std::sort(nodes.begin(), nodes.end());
  std::sort(rels.begin(), rels.end());
  return {nodes, rels};
}

}  // namespace

TEST_CASE("emission of authors cited by John") {
  EmittedQuery e = emit(cited_by_john());
  CHECK(e.dialect == "cypher");
  CHECK(e.text ==
        "MATCH (cited_Class_Author_1:Author)-[:WRITES]->(cited_Class_Paper_2:Paper),\n"
        "      (citing_Author_4:Author)-[:WRITES]->(citing_Class_Paper_3:Paper),\n"
        "      (citing_Class_Paper_3)-[:CITES]->(cited_Class_Paper_2)\n"
        "WHERE citing_Author_4.name = \"John\"\n"
        "RETURN DISTINCT cited_Class_Author_1");
}

TEST_CASE("every node appears in the patterns") {
  for (const SuiteQuery& a : suite_queries()) {
    CAPTURE(a.number);
    GraphQuery q = compile(a.text, dictionary(), schema());
    std::string text = emit(q).text;
    std::string match = text.substr(0, text.find("\nWHERE"));
    match = match.substr(0, match.find("\nRETURN"));
    for (const GraphNode& n : q.nodes) {
      std::string labelled = "(" + n.instance + ":" + std::string(to_string(n.type)) + ")";
      auto first = match.find(labelled);
      CHECK(first != std::string::npos);
      CHECK(match.find(labelled, first + 1) == std::string::npos);
    }
    std::size_t constraints = 0;
    for (const GraphNode& n : q.nodes) constraints += n.constraint.has_value();
    std::size_t equalities = 0;
    for (auto p = text.find(".name = "); p != std::string::npos;
         p = text.find(".name = ", p + 1)) {
      ++equalities;
    }
    CHECK(equalities == constraints);
    CHECK(text.ends_with("RETURN DISTINCT " + q.nodes[q.answer()].instance));
  }
}

TEST_CASE("single node emission") {
  GraphQuery q = compile("papers", dictionary(), schema());
  CHECK(emit(q).text == "MATCH (Class_Paper_1:Paper)\nRETURN DISTINCT Class_Paper_1");

  GraphQuery named;
  GraphNode n;
  n.type = EntityType::kSource;
  n.is_class = false;
  n.answer = true;
  n.constraint = "Pattern Recognition";
  n.seq = 1;
  n.instance = "Source_1";
  named.nodes.push_back(n);
  CHECK(emit(named).text ==
        "MATCH (Source_1:Source)\n"
        "WHERE Source_1.name = \"Pattern Recognition\"\n"
        "RETURN DISTINCT Source_1");
}

TEST_CASE("emission is deterministic") {
  for (const SuiteQuery& a : suite_queries()) {
    GraphQuery q = compile(a.text, dictionary(), schema());
    CHECK(emit(q).text == emit(q).text);
    CHECK(emit(q).text == emit(compile(a.text, dictionary(), schema())).text);
  }
}

TEST_CASE("string escaping") {
  CHECK(quote_string("John") == "\"John\"");
  CHECK(quote_string("say \"hi\"") == "\"say \\\"hi\\\"\"");
  CHECK(quote_string("a\\b") == "\"a\\\\b\"");
  CHECK(quote_string("O'Neil") == "\"O'Neil\"");

  GraphQuery q = cited_by_john();
  q.nodes[*q.find("citing_Author_4")].constraint = "J. \"Jack\" O\\Neil";
  GraphQuery back = read_cypher(emit(q).text);
  CHECK(back.nodes[*back.find("citing_Author_4")].constraint ==
        "J. \"Jack\" O\\Neil");
}

TEST_CASE("unsupported dialect") {
  CHECK(supported_dialects() == std::vector<std::string>{"cypher"});
  try {
    emit(cited_by_john(), "gremlin");
    FAIL("expected an error");
  } catch (const UnsupportedDialect& e) {
    std::string what = e.what();
    CHECK(what.find("gremlin") != std::string::npos);
    CHECK(what.find("cypher") != std::string::npos);
  }
}

TEST_CASE("reader round trip on the suite") {
  for (const SuiteQuery& a : suite_queries()) {
    CAPTURE(a.number);
    GraphQuery q = compile(a.text, dictionary(), schema());
    GraphQuery back = read_cypher(emit(q).text);
    CHECK(canonical(back) == canonical(q));
    CHECK(emit(back).text.size() == emit(q).text.size());
  }
}

TEST_CASE("reader accepts chains and reversed edges") {
  GraphQuery q = read_cypher(
      "MATCH (a:Author)-[:WRITES]->(p:Paper)<-[:PUBLISHES]-(s:Source)\n"
      "WHERE s.name = \"X\" AND a.name = \"Y\"\nRETURN p");
  REQUIRE(q.nodes.size() == 3);
  CHECK(q.nodes[q.answer()].instance == "p");
  REQUIRE(q.relations.size() == 2);
  CHECK(q.relations[1] == GraphRelation{2, 1, "PUBLISHES"});
  CHECK(q.nodes[2].constraint == "X");
  CHECK(q.nodes[0].constraint == "Y");
}

TEST_CASE("reader errors") {
  const char* bad[] = {
      "",
      "MATCH (a:Author)",
      "MATCH (a:Author RETURN a",
      "MATCH (a:Author)-[:WRITES]-(p:Paper) RETURN a",
      "MATCH (a:Robot) RETURN a",
      "MATCH (a:Author) WHERE a.name = \"open RETURN a",
      "MATCH (a:Author) RETURN b",
      "MATCH (a:Author), (a:Paper) RETURN a",
      "MATCH (a:Author) RETURN a extra",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(read_cypher(text), CypherSyntaxError);
  }
}
