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

// Dependency parsing for the controlled bibliographic query language.
//
// Queries are noun phrases: a head entity followed by prepositional phrases,
// relative clauses and coordinations, e.g.
//
//   papers that were written by John
//   Sources that published Zesheng Chen's papers
//   Authors at University899, who wrote papers that were about classifier
//
// Citation queries are first split at the citation verb into a cited and a
// citing part, and each part is parsed on its own. The parser emits
// Stanford-style typed dependencies over the NER-aware tokens.

#ifndef BIBNLI_CNL_PARSER_HPP_
#define BIBNLI_CNL_PARSER_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bibnli/lexicon.hpp"

namespace bibnli {

enum class DepCode {
  kRoot,
  kCase,
  kNmod,
  kNmodPoss,
  kCc,
  kConj,
  kRef,
  kNsubjpass,
  kAuxpass,
  kAclRelcl,
  kDobj,
  kNsubj,
};

// "root", "nmod:poss", "acl:relcl", ...
std::string_view to_string(DepCode code);
// "case marker", "nmod_preposition", "relative clause modifier", ...
std::string_view relation_name(DepCode code);
std::optional<DepCode> parse_dep_code(std::string_view code);

// Token positions are relative to the parsed token list.
struct DependencyRelation {
  std::optional<std::size_t> subject;  // absent only for root
  std::size_t object = 0;
  DepCode code = DepCode::kRoot;

  friend bool operator==(const DependencyRelation&,
                         const DependencyRelation&) = default;
};

struct ParseResult {
  std::vector<DependencyRelation> relations;
  std::size_t root = 0;  // object of the unique root relation
};

// Which side of a citation a part (or a node) belongs to.
enum class Part { kMain, kCited, kCiting };

std::string_view to_string(Part part);
// "", "cited_", "citing_"
std::string_view part_prefix(Part part);

struct QueryPart {
  Part role = Part::kMain;
  std::vector<Token> tokens;  // tokens keep their query-wide indices
};

// Parts in query order. Without a citation keyword there is exactly one
// part with role kMain and no pivot.
struct QueryParts {
  std::vector<QueryPart> parts;
  std::optional<Token> pivot;

  const QueryPart* find(Part role) const;
  const QueryPart* cited() const { return find(Part::kCited); }
  const QueryPart* citing() const { return find(Part::kCiting); }
};

// Splits at the single citation keyword ("cited", "cites", "cite",
// "citing") found outside any mention. Passive "cited" puts the cited part
// on the left; the active forms put the citing part on the left.
// Throws PipelineError (UnsupportedQuery) on more than one keyword and
// (UnparsableQuery) when either side of the keyword is empty.
QueryParts split_citation(std::span<const Token> tokens);

// Every function word the grammar and the citation split recognize.
std::vector<std::string_view> grammar_words();

// Seam for substituting a different dependency parser.
class DependencyParser {
 public:
  virtual ~DependencyParser() = default;
  virtual ParseResult parse(std::span<const Token> tokens) const = 0;
};

// Deterministic parser for the controlled query grammar. Throws
// PipelineError (UnparsableQuery) naming the first token without a
// derivation.
class ControlledGrammarParser final : public DependencyParser {
 public:
  ParseResult parse(std::span<const Token> tokens) const override;
};

inline ParseResult parse(std::span<const Token> tokens) {
  return ControlledGrammarParser{}.parse(tokens);
}

// One row of a dependency table: (order, subject, object, code, name).
struct DependencyRow {
  std::size_t order = 0;  // 1-based
  std::string subject;    // empty for root
  std::string object;
  std::string code;
  std::string name;
};

std::vector<DependencyRow> dependency_table(const ParseResult& parse,
                                           std::span<const Token> tokens);

}  // namespace bibnli

#endif  // BIBNLI_CNL_PARSER_HPP_
