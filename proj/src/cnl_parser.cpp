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

#include "bibnli/cnl_parser.hpp"

#include <algorithm>
#include <array>

#include "bibnli/error.hpp"

namespace bibnli {

namespace {

struct CodeInfo {
  DepCode code;
  std::string_view text;
  std::string_view name;
};

constexpr std::array<CodeInfo, 12> kCodes = {{
    {DepCode::kRoot, "root", "root"},
    {DepCode::kCase, "case", "case marker"},
    {DepCode::kNmod, "nmod", "nmod_preposition"},
    {DepCode::kNmodPoss, "nmod:poss", "possession modifier"},
    {DepCode::kCc, "cc", "coordination"},
    {DepCode::kConj, "conj", "conj_collapsed"},
    {DepCode::kRef, "ref", "referent"},
    {DepCode::kNsubjpass, "nsubjpass", "nominal passive subject"},
    {DepCode::kAuxpass, "auxpass", "passive auxiliary"},
    {DepCode::kAclRelcl, "acl:relcl", "relative clause modifier"},
    {DepCode::kDobj, "dobj", "direct object"},
    {DepCode::kNsubj, "nsubj", "nominal subject"},
}};

template <std::size_t N>
bool one_of(std::string_view word,
            const std::array<std::string_view, N>& words) {
  return std::find(words.begin(), words.end(), word) != words.end();
}

constexpr std::array<std::string_view, 7> kPrepositions = {
    "about", "of", "by", "in", "at", "on", "with"};
constexpr std::array<std::string_view, 4> kRelativePronouns = {
    "that", "which", "who", "whose"};
constexpr std::array<std::string_view, 11> kVerbs = {
    "written", "wrote", "published", "presented", "affiliated", "are",
    "is",      "was",   "were",      "had",       "been"};
constexpr std::array<std::string_view, 5> kParticiples = {
    "written", "published", "presented", "affiliated", "been"};
constexpr std::array<std::string_view, 2> kConjunctions = {"and", "or"};
constexpr std::array<std::string_view, 3> kDeterminers = {"the", "a", "an"};
constexpr std::array<std::string_view, 4> kCitationKeywords = {
    "cited", "cites", "cite", "citing"};

// Recursive descent over one query part. Instance mentions (proper names)
// take no modifiers, so a trailing phrase after "about modulation" attaches
// back to the nearest class head ("Papers").
class Grammar {
 public:
  explicit Grammar(std::span<const Token> tokens) : tokens_(tokens) {
    words_.reserve(tokens.size());
    for (const Token& t : tokens) {
      words_.push_back(t.mention ? std::string() : fold_ascii(t.text));
    }
  }

  ParseResult run() {
    std::optional<std::size_t> lead;
    if (is_prep(pos_) && starts_np(pos_ + 1)) lead = pos_++;
    std::size_t head = np();
    if (pos_ != tokens_.size()) fail_at(pos_);

    std::vector<DependencyRelation> front;
    front.push_back({std::nullopt, head, DepCode::kRoot});
    if (lead) front.push_back({head, *lead, DepCode::kCase});
    rels_.insert(rels_.begin(), front.begin(), front.end());
    return {std::move(rels_), head};
  }

 private:
  bool in_range(std::size_t i) const { return i < tokens_.size(); }
  bool is_entity(std::size_t i) const {
    return in_range(i) && tokens_[i].mention.has_value();
  }
  bool is_word(std::size_t i, std::string_view w) const {
    return in_range(i) && words_[i] == w;
  }
  template <std::size_t N>
  bool is_in(std::size_t i, const std::array<std::string_view, N>& set) const {
    return in_range(i) && !tokens_[i].mention && one_of(words_[i], set);
  }
  bool is_prep(std::size_t i) const { return is_in(i, kPrepositions); }
  bool is_relpron(std::size_t i) const { return is_in(i, kRelativePronouns); }
  bool is_verb(std::size_t i) const { return is_in(i, kVerbs); }
  bool is_conj(std::size_t i) const { return is_in(i, kConjunctions); }
  bool is_det(std::size_t i) const { return is_in(i, kDeterminers); }
  bool is_comma(std::size_t i) const { return is_word(i, ","); }
  bool starts_np(std::size_t i) const {
    return is_entity(i) || (is_det(i) && is_entity(i + 1));
  }

  bool is_class_head(std::size_t i) const {
    return is_entity(i) && tokens_[i].class_mention;
  }

  [[noreturn]] void fail_at(std::size_t i) const {
    if (!in_range(i)) {
      throw PipelineError(ErrorKind::kUnparsableQuery, Stage::kParsing,
                          "unexpected end of query");
    }
    throw PipelineError(ErrorKind::kUnparsableQuery, Stage::kParsing,
                        "no grammar derivation at token '" + tokens_[i].text +
                            "'",
                        tokens_[i].text);
  }

  void emit(std::size_t subject, std::size_t object, DepCode code) {
    rels_.push_back({subject, object, code});
  }

  // NP := Det? Entity ("'s" Entity)? Post*
  std::size_t np() {
    if (is_det(pos_)) ++pos_;
    if (!is_entity(pos_)) fail_at(pos_);
    std::size_t head = pos_++;
    if (is_word(pos_, "'s") && is_entity(pos_ + 1)) {
      std::size_t owner = head;
      std::size_t marker = pos_;
      head = pos_ + 1;
      pos_ += 2;
      emit(owner, marker, DepCode::kCase);
      emit(head, owner, DepCode::kNmodPoss);
    }
    post(head);
    return head;
  }

  void post(std::size_t head) {
    if (!is_class_head(head)) return;
    while (in_range(pos_)) {
      if (is_prep(pos_) && starts_np(pos_ + 1)) {
        std::size_t prep = pos_++;
        np_list(head, DepCode::kNmod, prep);
      } else if (is_relpron(pos_)) {
        relative_clause(head);
      } else if (is_comma(pos_) && is_relpron(pos_ + 1)) {
        ++pos_;
        relative_clause(head);
      } else {
        break;
      }
    }
  }

  // Coordinated noun phrases governed by `governor`. Each conjunct gets its
  // own `code` relation from the governor; cc and conj chain to the first.
  void np_list(std::size_t governor, DepCode code,
               std::optional<std::size_t> prep) {
    std::size_t mark = rels_.size();
    std::size_t first = np();
    std::vector<DependencyRelation> lead;
    if (prep) lead.push_back({first, *prep, DepCode::kCase});
    lead.push_back({governor, first, code});
    rels_.insert(rels_.begin() + static_cast<std::ptrdiff_t>(mark),
                 lead.begin(), lead.end());

    while (true) {
      std::optional<std::size_t> conj;
      if (is_comma(pos_) && is_conj(pos_ + 1) && starts_np(pos_ + 2)) {
        conj = pos_ + 1;
        pos_ += 2;
      } else if (is_comma(pos_) && starts_np(pos_ + 1)) {
        pos_ += 1;
      } else if (is_conj(pos_) && starts_np(pos_ + 1)) {
        conj = pos_;
        pos_ += 1;
      } else {
        break;
      }
      if (conj) emit(first, *conj, DepCode::kCc);
      std::size_t at = rels_.size();
      std::size_t next = np();
      std::array<DependencyRelation, 2> links = {{
          {governor, next, code},
          {first, next, DepCode::kConj},
      }};
      rels_.insert(rels_.begin() + static_cast<std::ptrdiff_t>(at),
                   links.begin(), links.end());
    }
  }

  // RelClause := RelPron ("whose" Noun)? VP (Conj VP)*
  void relative_clause(std::size_t head) {
    std::size_t pronoun = pos_++;
    std::size_t subject = head;
    bool whose = words_[pronoun] == "whose";
    if (whose) {
      // The possessed noun heads the clause and points back to the owner.
      if (!in_range(pos_) || is_verb(pos_) || is_prep(pos_)) fail_at(pos_);
      subject = pos_++;
      emit(head, pronoun, DepCode::kRef);
      emit(subject, head, DepCode::kNmodPoss);
    }

    std::vector<std::size_t> verbs = verb_group();
    if (verbs.empty() || !in_range(pos_)) {
      // The clause was cut at a citation keyword ("papers that were | cited
      // by ..."); only the pronoun survives in this part.
      if (verbs.empty() && in_range(pos_)) fail_at(pos_);
      if (!whose) emit(head, pronoun, DepCode::kRef);
      return;
    }

    std::size_t verb =
        verb_phrase(subject, verbs, whose ? std::nullopt
                                          : std::optional<std::size_t>(head),
                    pronoun);
    // Coordinated verb phrases share the clause subject.
    while (true) {
      std::optional<std::size_t> conj;
      std::size_t look = pos_;
      if (is_comma(look)) ++look;
      if (is_conj(look)) conj = look++;
      if (look == pos_ || !is_verb(look)) break;
      pos_ = look;
      if (conj) emit(verb, *conj, DepCode::kCc);
      std::vector<std::size_t> more = verb_group();
      std::size_t at = rels_.size();
      std::size_t next = verb_phrase(subject, more, std::nullopt, pronoun);
      rels_.insert(rels_.begin() + static_cast<std::ptrdiff_t>(at),
                   DependencyRelation{verb, next, DepCode::kConj});
    }
  }

  std::vector<std::size_t> verb_group() {
    std::vector<std::size_t> verbs;
    while (is_verb(pos_)) verbs.push_back(pos_++);
    return verbs;
  }

  // VP := Aux* Verb (NP-list | (Prep NP-list)+). Returns the main verb.
  std::size_t verb_phrase(std::size_t subject,
                          const std::vector<std::size_t>& verbs,
                          std::optional<std::size_t> ref_head,
                          std::size_t pronoun) {
    std::size_t verb = verbs.back();
    bool has_aux = verbs.size() > 1;
    auto clause_frame = [&](bool passive) {
      emit(verb, subject, passive ? DepCode::kNsubjpass : DepCode::kNsubj);
      if (ref_head) emit(*ref_head, pronoun, DepCode::kRef);
      for (std::size_t i = 0; i + 1 < verbs.size(); ++i) {
        emit(verb, verbs[i], DepCode::kAuxpass);
      }
      emit(subject, verb, DepCode::kAclRelcl);
    };

    if (starts_np(pos_)) {
      clause_frame(false);
      np_list(verb, DepCode::kDobj, std::nullopt);
      return verb;
    }
    if (is_prep(pos_) && starts_np(pos_ + 1)) {
      bool participle =
          !tokens_[verb].mention && one_of(words_[verb], kParticiples);
      clause_frame(has_aux || participle);
      while (is_prep(pos_) && starts_np(pos_ + 1)) {
        std::size_t prep = pos_++;
        np_list(verb, DepCode::kNmod, prep);
      }
      return verb;
    }
    fail_at(pos_);
  }

  std::span<const Token> tokens_;
  std::vector<std::string> words_;
  std::vector<DependencyRelation> rels_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string_view to_string(DepCode code) {
  for (const CodeInfo& info : kCodes) {
    if (info.code == code) return info.text;
  }
  return "?";
}

std::string_view relation_name(DepCode code) {
  for (const CodeInfo& info : kCodes) {
    if (info.code == code) return info.name;
  }
  return "?";
}

std::optional<DepCode> parse_dep_code(std::string_view code) {
  for (const CodeInfo& info : kCodes) {
    if (info.text == code) return info.code;
  }
  return std::nullopt;
}

std::string_view to_string(Part part) {
  switch (part) {
    case Part::kMain:
      return "main";
    case Part::kCited:
      return "cited";
    case Part::kCiting:
      return "citing";
  }
  return "?";
}

std::string_view part_prefix(Part part) {
  switch (part) {
    case Part::kMain:
      return "";
    case Part::kCited:
      return "cited_";
    case Part::kCiting:
      return "citing_";
  }
  return "";
}

const QueryPart* QueryParts::find(Part role) const {
  for (const QueryPart& p : parts) {
    if (p.role == role) return &p;
  }
  return nullptr;
}

std::vector<std::string_view> grammar_words() {
  std::vector<std::string_view> out;
  auto add = [&](const auto& words) {
    out.insert(out.end(), words.begin(), words.end());
  };
  add(kPrepositions);
  add(kRelativePronouns);
  add(kVerbs);
  add(kConjunctions);
  add(kDeterminers);
  add(kCitationKeywords);
  return out;
}

QueryParts split_citation(std::span<const Token> tokens) {
  std::vector<std::size_t> keywords;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].mention) continue;
    if (one_of(fold_ascii(tokens[i].text), kCitationKeywords)) {
      keywords.push_back(i);
    }
  }

  QueryParts out;
  if (keywords.empty()) {
    out.parts.push_back({Part::kMain, {tokens.begin(), tokens.end()}});
    return out;
  }
  if (keywords.size() > 1) {
    const Token& second = tokens[keywords[1]];
    throw PipelineError(ErrorKind::kUnsupportedQuery, Stage::kSplitting,
                        "more than one citation keyword ('" + second.text +
                            "')",
                        second.text);
  }

  std::size_t p = keywords.front();
  const Token& pivot = tokens[p];
  if (p == 0 || p + 1 == tokens.size()) {
    throw PipelineError(ErrorKind::kUnparsableQuery, Stage::kSplitting,
                        "citation keyword '" + pivot.text +
                            "' needs a phrase on both sides",
                        pivot.text);
  }
  bool passive = fold_ascii(pivot.text) == "cited";
  QueryPart left{passive ? Part::kCited : Part::kCiting,
                 {tokens.begin(), tokens.begin() + static_cast<std::ptrdiff_t>(p)}};
  QueryPart right{passive ? Part::kCiting : Part::kCited,
                  {tokens.begin() + static_cast<std::ptrdiff_t>(p + 1),
                   tokens.end()}};
  out.parts.push_back(std::move(left));
  out.parts.push_back(std::move(right));
  out.pivot = pivot;
  return out;
}

ParseResult ControlledGrammarParser::parse(std::span<const Token> tokens) const {
  if (tokens.empty()) {
    throw PipelineError(ErrorKind::kUnparsableQuery, Stage::kParsing,
                        "empty query part");
  }
  Grammar grammar(tokens);
  return grammar.run();
}

std::vector<DependencyRow> dependency_table(const ParseResult& parse,
                                           std::span<const Token> tokens) {
  std::vector<DependencyRow> rows;
  rows.reserve(parse.relations.size());
  for (std::size_t i = 0; i < parse.relations.size(); ++i) {
    const DependencyRelation& r = parse.relations[i];
    DependencyRow row;
    row.order = i + 1;
    if (r.subject) row.subject = tokens[*r.subject].text;
    row.object = tokens[r.object].text;
    row.code = std::string(to_string(r.code));
    row.name = std::string(relation_name(r.code));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace bibnli
