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

// The graph query: the intermediate representation between a parsed
// natural language query and the emitted query text.
//
// Nodes come from recognized mentions (plus nodes inserted to satisfy the
// schema); relations come from the dependency parse. Every relation matches
// a schema edge type, the graph is connected, and exactly one node is the
// answer.

#ifndef BIBNLI_QUERY_GRAPH_HPP_
#define BIBNLI_QUERY_GRAPH_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bibnli/cnl_parser.hpp"
#include "bibnli/entity.hpp"
#include "bibnli/error.hpp"
#include "bibnli/lexicon.hpp"
#include "bibnli/schema.hpp"

namespace bibnli {

struct GraphNode {
  std::string instance;  // e.g. "cited_Class_Paper_1"
  EntityType type = EntityType::kPaper;
  Part part = Part::kMain;
  bool is_class = true;  // class mention or inserted node
  bool answer = false;
  std::optional<std::string> constraint;  // canonical name
  std::string named_entity;               // query surface; empty if inserted
  std::optional<std::size_t> mention;     // absent for inserted nodes
  std::size_t seq = 0;
};

struct GraphRelation {
  std::size_t source = 0;  // node indices
  std::size_t target = 0;
  std::string label;

  friend bool operator==(const GraphRelation&, const GraphRelation&) = default;
};

struct GraphQuery {
  std::vector<GraphNode> nodes;
  std::vector<GraphRelation> relations;

  // Index of the answer node; throws std::logic_error if there is none.
  std::size_t answer() const;
  std::optional<std::size_t> find(std::string_view instance) const;
};

// "<prefix><Class_ or empty><Type>_<seq>"
std::string instance_name(Part part, bool is_class, EntityType type,
                          std::size_t seq);

// Invariant violations, one message each; empty for a valid query.
std::vector<std::string> validate(const GraphQuery& query,
                                  const Schema& schema);

// Pair of part-local token positions that both carry mentions.
struct MentionPair {
  std::size_t subject = 0;
  std::size_t object = 0;

  friend bool operator==(const MentionPair&, const MentionPair&) = default;
};

// Keeps dependencies whose two ends are named entities (except conj), and
// bridges "head -acl:relcl-> verb -nmod/dobj-> entity" into (head, entity).
// A non-entity head that possesses an entity ("authors whose work ...")
// stands for that entity. Unordered duplicates are dropped.
std::vector<MentionPair> select_graph_relations(const ParseResult& parse,
                                                std::span<const Token> tokens);

// Mention index of the root object. Throws InterpretationFailure when the
// root token is not a named entity.
std::size_t identify_answer(const ParseResult& parse,
                            std::span<const Token> tokens);

struct PartMention {
  std::size_t mention = 0;  // index into the mention list
  Part part = Part::kMain;
};

// One node per mention, numbered 1..n in the given (query) order.
std::vector<GraphNode> build_nodes(std::span<const PartMention> mentions,
                                   std::span<const Mention> all_mentions,
                                   std::size_t answer_mention);

struct NodePair {
  std::size_t a = 0;
  std::size_t b = 0;

  friend bool operator==(const NodePair&, const NodePair&) = default;
};

struct Connection {
  std::vector<GraphNode> added;  // indices continue after the input nodes
  std::vector<NodePair> pairs;   // every pair is schema-adjacent
};

// Replaces each pair whose types are not adjacent in the schema with the
// hops of the shortest schema path, inserting class nodes for the
// intermediate types. Throws UnsupportedQuery when no path exists.
Connection ensure_connected(std::span<const GraphNode> nodes,
                            std::span<const NodePair> pairs,
                            const Schema& schema);

// Directs every pair along its schema edge and attaches the label.
std::vector<GraphRelation> orient(std::span<const GraphNode> nodes,
                                  std::span<const NodePair> pairs,
                                  const Schema& schema);

// One part of a query, already connected and oriented.
struct QueryFragment {
  GraphQuery graph;
  std::size_t root = 0;  // node of the part's root mention
  Part part = Part::kMain;
};

// Unions both fragments and joins them with citing-Paper -CITES-> cited-Paper,
// inserting a Paper node into a part that has none. Cited nodes come first.
GraphQuery integrate_citation(const QueryFragment& cited,
                              const QueryFragment& citing,
                              const Schema& schema);

// Renumbers nodes breadth-first from the answer node (following relation
// order), reorders them by the new sequence and rewrites instance names.
void number_nodes(GraphQuery& query);

struct StageTiming {
  Stage stage;
  double ms = 0.0;
};

struct PartAnalysis {
  Part role = Part::kMain;
  std::vector<Token> tokens;
  std::optional<ParseResult> parse;
  std::vector<MentionPair> pairs;
};

// Every artifact of one compilation. On failure the stages before the
// failing one are populated and `error` is set.
struct Compilation {
  std::string query;
  std::vector<Mention> mentions;
  std::vector<Token> tokens;
  std::optional<Token> pivot;
  std::vector<PartAnalysis> parts;
  std::optional<GraphQuery> graph;
  std::optional<PipelineError> error;
  std::vector<StageTiming> timings;

  bool ok() const { return graph.has_value() && !error; }
};

// recognize -> tokenize -> split -> parse -> select -> nodes -> connect ->
// orient -> integrate. Never throws PipelineError.
Compilation compile_traced(std::string_view query, const Dictionary& dict,
                           const Schema& schema,
                           const DependencyParser& parser =
                               ControlledGrammarParser{});

// As compile_traced, but throws the PipelineError on failure.
GraphQuery compile(std::string_view query, const Dictionary& dict,
                   const Schema& schema);

}  // namespace bibnli

#endif  // BIBNLI_QUERY_GRAPH_HPP_
