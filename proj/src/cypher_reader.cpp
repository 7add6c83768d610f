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


#include "bibnli/cypher_reader.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <regex>
#include <vector>

namespace bibnli {

CypherSyntaxError::CypherSyntaxError(const std::string& message,
                                     std::size_t offset)
    : std::runtime_error(message + " at offset " + std::to_string(offset)),
      offset_(offset) {}

namespace {

enum class Tok { kIdent, kString, kPunct, kEnd };

struct Lexeme {
  Tok kind = Tok::kEnd;
  std::string text;
  std::size_t offset = 0;
};

std::vector<Lexeme> lex(std::string_view s) {
  std::vector<Lexeme> out;
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char c = s[i];
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isalpha(c) || c == '_') {
      while (i < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
        ++i;
      }
      out.push_back({Tok::kIdent, std::string(s.substr(start, i - start)),
                     start});
      continue;
    }
    if (c == '"') {
      std::string value;
      ++i;
      while (true) {
        if (i >= s.size()) {
          throw CypherSyntaxError("unterminated string", start);
        }
        char d = s[i++];
        if (d == '"') break;
        if (d == '\\') {
          if (i >= s.size()) {
            throw CypherSyntaxError("unterminated string", start);
          }
          d = s[i++];
          if (d != '"' && d != '\\') {
            throw CypherSyntaxError("unknown escape", i - 2);
          }
        }
        value += d;
      }
      out.push_back({Tok::kString, std::move(value), start});
      continue;
    }
    if (std::string_view("():,.=[]-<>").find(static_cast<char>(c)) !=
        std::string_view::npos) {
      out.push_back({Tok::kPunct, std::string(1, static_cast<char>(c)), i});
      ++i;
      continue;
    }
    throw CypherSyntaxError(std::string("unexpected character '") +
                                static_cast<char>(c) + "'",
                            i);
  }
  out.push_back({Tok::kEnd, "", s.size()});
  return out;
}

bool keyword_equals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::toupper(static_cast<unsigned char>(a[i])) != b[i]) return false;
  }
  return true;
}

class Reader {
 public:
  explicit Reader(std::string_view text) : toks_(lex(text)) {}

  GraphQuery run() {
    keyword("MATCH");
    pattern();
    while (punct_if(",")) pattern();
    if (keyword_if("WHERE")) {
      condition();
      while (keyword_if("AND")) condition();
    }
    keyword("RETURN");
    keyword_if("DISTINCT");
    const Lexeme& ret = ident();
    std::size_t answer = variable(ret);
    if (peek().kind != Tok::kEnd) fail("trailing input");
    return build(answer);
  }

 private:
  struct Var {
    std::string name;
    std::optional<EntityType> type;
    std::optional<std::string> constraint;
  };

  const Lexeme& peek() const { return toks_[pos_]; }
  const Lexeme& next() {
    const Lexeme& t = toks_[pos_];
    if (t.kind != Tok::kEnd) ++pos_;
    return t;
  }
  [[noreturn]] void fail(const std::string& message) const {
    throw CypherSyntaxError(message, peek().offset);
  }

  bool keyword_if(std::string_view kw) {
    if (peek().kind == Tok::kIdent && keyword_equals(peek().text, kw)) {
      next();
      return true;
    }
    return false;
  }
  void keyword(std::string_view kw) {
    if (!keyword_if(kw)) fail("expected " + std::string(kw));
  }
  bool punct_if(std::string_view p) {
    if (peek().kind == Tok::kPunct && peek().text == p) {
      next();
      return true;
    }
    return false;
  }
  void punct(std::string_view p) {
    if (!punct_if(p)) fail("expected '" + std::string(p) + "'");
  }
  const Lexeme& ident() {
    if (peek().kind != Tok::kIdent) fail("expected identifier");
    return next();
  }

  std::size_t declare(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    index_[name] = vars_.size();
    vars_.push_back({name, std::nullopt, std::nullopt});
    return vars_.size() - 1;
  }

  std::size_t variable(const Lexeme& t) {
    auto it = index_.find(t.text);
    if (it == index_.end()) {
      throw CypherSyntaxError("unknown variable '" + t.text + "'", t.offset);
    }
    return it->second;
  }

  std::size_t node() {
    punct("(");
    std::size_t v = declare(ident().text);
    if (punct_if(":")) {
      const Lexeme& label = ident();
      auto type = parse_entity_type(label.text);
      if (!type) {
        throw CypherSyntaxError("unknown node label '" + label.text + "'",
                                label.offset);
      }
      if (vars_[v].type && *vars_[v].type != *type) {
        throw CypherSyntaxError("conflicting labels for '" + vars_[v].name + "'",
                                label.offset);
      }
      vars_[v].type = type;
    }
    punct(")");
    return v;
  }

  void pattern() {
    std::size_t left = node();
    while (peek().kind == Tok::kPunct &&
           (peek().text == "-" || peek().text == "<")) {
      bool backward = punct_if("<");
      punct("-");
      punct("[");
      punct(":");
      std::string label = ident().text;
      punct("]");
      punct("-");
      if (!backward) punct(">");
      std::size_t right = node();
      if (backward) {
        edges_.push_back({right, left, label});
      } else {
        edges_.push_back({left, right, label});
      }
      left = right;
    }
  }

  void condition() {
    std::size_t v = variable(ident());
    punct(".");
    const Lexeme& prop = ident();
    if (prop.text != "name") {
      throw CypherSyntaxError("only the name property can be constrained",
                              prop.offset);
    }
    punct("=");
    if (peek().kind != Tok::kString) fail("expected string literal");
    std::string value = next().text;
    if (vars_[v].constraint && *vars_[v].constraint != value) {
      fail("conflicting constraints on '" + vars_[v].name + "'");
    }
    vars_[v].constraint = std::move(value);
  }

  GraphQuery build(std::size_t answer) const {
    static const std::regex kName(
        "^(cited_|citing_)?(Class_)?(Paper|Author|Term|Source|Organization)_"
        "([0-9]+)$");
    GraphQuery q;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      const Var& v = vars_[i];
      if (!v.type) {
        throw CypherSyntaxError("variable '" + v.name + "' has no label", 0);
      }
      GraphNode n;
      n.instance = v.name;
      n.type = *v.type;
      n.answer = i == answer;
      n.constraint = v.constraint;
      n.is_class = !v.constraint;
      n.seq = i + 1;
      std::smatch m;
      if (std::regex_match(v.name, m, kName)) {
        if (m[1] == "cited_") n.part = Part::kCited;
        if (m[1] == "citing_") n.part = Part::kCiting;
        n.seq = std::stoul(m[4]);
      }
      q.nodes.push_back(std::move(n));
    }
    q.relations = edges_;
    return q;
  }

  std::vector<Lexeme> toks_;
  std::size_t pos_ = 0;
  std::vector<Var> vars_;
  std::map<std::string, std::size_t> index_;
  std::vector<GraphRelation> edges_;
};

}  // namespace

GraphQuery read_cypher(std::string_view text) { return Reader(text).run(); }

}  // namespace bibnli
