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


#include "bibnli/query_suite.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "bibnli/error.hpp"

namespace bibnli {

namespace {

struct Row {
  int number;
  const char* text;
  std::size_t entities;
  const char* gold;
};

constexpr Row kRows[] = {
    {1, "Papers by Gerard Salton", 2, "?P | A=Gerard Salton ; 1 WRITES 0"},
    {2, "Michael Lawrence's papers", 2, "?P | A=Michael Lawrence ; 1 WRITES 0"},
    {3, "Papers that were written by Sangjun Lee", 2,
     "?P | A=Sangjun Lee ; 1 WRITES 0"},
    {4, "Papers about ontology", 2, "?P | T=ontology ; 0 HAS_TERM 1"},
    {5, "Authors of Automatic text structuring experiments", 2,
     "?A | P=Automatic text structuring experiments ; 0 WRITES 1"},
    {6,
     "Papers that were cited by Energy-Aware and Time-Critical Geo-Routing in "
     "Wireless Sensor Networks",
     2,
     "cited:?P | citing:P=Energy-Aware and Time-Critical Geo-Routing in "
     "Wireless Sensor Networks ; 1 CITES 0"},
    {7, "Terms of Opacity generalised to transition systems", 2,
     "?T | P=Opacity generalised to transition systems ; 1 HAS_TERM 0"},
    {8, "Organization of Johann Eder", 2,
     "?O | A=Johann Eder ; 1 AFFILIATED_WITH 0"},
    {9, "Sources that published The Effect of Faults on Network Expansions", 2,
     "?S | P=The Effect of Faults on Network Expansions ; 0 PUBLISHES 1"},
    {10, "Papers that were published in Theoretical Computer Science", 2,
     "?P | S=Theoretical Computer Science ; 1 PUBLISHES 0"},
    {11, "Papers about classification and DNA", 3,
     "?P | T=classification | T=DNA ; 0 HAS_TERM 1 ; 0 HAS_TERM 2"},
    {12,
     "Papers that were written by John R. Mick and published in ACM SIGMICRO "
     "Newsletter",
     3,
     "?P | A=John R. Mick | S=ACM SIGMICRO Newsletter ; 1 WRITES 0 ; "
     "2 PUBLISHES 0"},
    {13, "Papers cites papers that were written by Braham Barkat", 3,
     "citing:?P | cited:P | cited:A=Braham Barkat ; 0 CITES 1 ; 2 WRITES 1"},
    {14, "Papers about modulation which were published in Neural Networks", 3,
     "?P | T=modulation | S=Neural Networks ; 0 HAS_TERM 1 ; 2 PUBLISHES 0"},
    {15,
     "Authors of University713 who wrote A control word model for detecting "
     "conflicts between microoperations",
     3,
     "?A | O=University713 | P=A control word model for detecting conflicts "
     "between microoperations ; 0 AFFILIATED_WITH 1 ; 0 WRITES 2"},
    {16, "Sources that published Zesheng Chen's papers", 3,
     "?S | A=Zesheng Chen | P ; 0 PUBLISHES 2 ; 1 WRITES 2"},
    {17, "Authors whose papers were published in AI Communications", 3,
     "?A | P | S=AI Communications ; 0 WRITES 1 ; 2 PUBLISHES 1"},
    {18, "Authors who wrote papers that were about simulation", 3,
     "?A | P | T=simulation ; 0 WRITES 1 ; 1 HAS_TERM 2"},
    {19, "Terms of Junghyun Nam's papers", 3,
     "?T | A=Junghyun Nam | P ; 2 HAS_TERM 0 ; 1 WRITES 2"},
    {20, "Organizations of authors of A New Quadtree Decomposition "
         "Reconstruction Methods",
     3,
     "?O | A | P=A New Quadtree Decomposition Reconstruction Methods ; "
     "1 AFFILIATED_WITH 0 ; 1 WRITES 2"},
    {21, "Papers about survey, semantic, and retrieval", 4,
     "?P | T=survey | T=semantic | T=retrieval ; 0 HAS_TERM 1 ; "
     "0 HAS_TERM 2 ; 0 HAS_TERM 3"},
    {22,
     "Authors of papers that were cited by papers that were published in "
     "Decision Support Systems",
     4,
     "cited:?A | cited:P | citing:P | citing:S=Decision Support Systems ; "
     "0 WRITES 1 ; 2 CITES 1 ; 3 PUBLISHES 2"},
    {23,
     "Papers that cite papers that were written by Rainer Engelke and "
     "published in Microsystem Technologies",
     4,
     "citing:?P | cited:P | cited:A=Rainer Engelke | "
     "cited:S=Microsystem Technologies ; 0 CITES 1 ; 2 WRITES 1 ; "
     "3 PUBLISHES 1"},
    {24,
     "Nina Yevtushenko's papers that were cited by papers that were written "
     "by Sergey Buffalov",
     4,
     "cited:?P | cited:A=Nina Yevtushenko | citing:P | "
     "citing:A=Sergey Buffalov ; 1 WRITES 0 ; 2 CITES 0 ; 3 WRITES 2"},
    {25, "Sources that published papers about genome and mining", 4,
     "?S | P | T=genome | T=mining ; 0 PUBLISHES 1 ; 1 HAS_TERM 2 ; "
     "1 HAS_TERM 3"},
    {26,
     "Terms of Rafae Bhatti's papers that were published in Communications "
     "of the ACM",
     4,
     "?T | A=Rafae Bhatti | P | S=Communications of the ACM ; 2 HAS_TERM 0 ; "
     "1 WRITES 2 ; 3 PUBLISHES 2"},
    {27,
     "Sources that published Tomasz Jurdzinski's papers which are about "
     "automata",
     4,
     "?S | A=Tomasz Jurdzinski | P | T=automata ; 0 PUBLISHES 2 ; "
     "1 WRITES 2 ; 2 HAS_TERM 3"},
    {28, "Terms of papers that were written by authors at University123", 4,
     "?T | P | A | O=University123 ; 1 HAS_TERM 0 ; 2 WRITES 1 ; "
     "2 AFFILIATED_WITH 3"},
    {29,
     "Organizations of authors whose papers were published in Journal of "
     "Multivariate Analysis",
     4,
     "?O | A | P | S=Journal of Multivariate Analysis ; "
     "1 AFFILIATED_WITH 0 ; 1 WRITES 2 ; 3 PUBLISHES 2"},
    {30,
     "Authors who are affiliated with University007 and wrote papers about "
     "clustering",
     4,
     "?A | O=University007 | P | T=clustering ; 0 AFFILIATED_WITH 1 ; "
     "0 WRITES 2 ; 2 HAS_TERM 3"},
    {31,
     "Papers about classification, which were cited by Asoke K. Nandi 's "
     "papers that had been presented in Pattern Recognition",
     5,
     "cited:?P | cited:T=classification | citing:A=Asoke K. Nandi | "
     "citing:P | citing:S=Pattern Recognition ; 0 HAS_TERM 1 ; 2 WRITES 3 ; "
     "4 PUBLISHES 3 ; 3 CITES 0"},
    {32,
     "Authors of papers that were cited by papers that were written by "
     "Changqiu Jin and published in Journal of Computational Physics",
     5,
     "cited:?A | cited:P | citing:P | citing:A=Changqiu Jin | "
     "citing:S=Journal of Computational Physics ; 0 WRITES 1 ; 2 CITES 1 ; "
     "3 WRITES 2 ; 4 PUBLISHES 2"},
    {33, "Terms of papers that were cited by papers about kernel and regression",
     5,
     "cited:?T | cited:P | citing:P | citing:T=kernel | citing:T=regression ; "
     "1 HAS_TERM 0 ; 2 CITES 1 ; 2 HAS_TERM 3 ; 2 HAS_TERM 4"},
    {34, "Sources that published papers cited papers about middleware and "
         "embedded",
     5,
     "cited:?S | cited:P | citing:P | citing:T=middleware | "
     "citing:T=embedded ; 0 PUBLISHES 1 ; 2 CITES 1 ; 2 HAS_TERM 3 ; "
     "2 HAS_TERM 4"},
    {35,
     "Organizations of authors whose papers were cited by papers that were "
     "published in Journal of Robotic Systems",
     5,
     "cited:?O | cited:A | cited:P | citing:P | "
     "citing:S=Journal of Robotic Systems ; 1 AFFILIATED_WITH 0 ; "
     "1 WRITES 2 ; 3 CITES 2 ; 4 PUBLISHES 3"},
    {36, "Organizations of authors who wrote papers on similarity and bayesian",
     5,
     "?O | A | P | T=similarity | T=bayesian ; 1 AFFILIATED_WITH 0 ; "
     "1 WRITES 2 ; 2 HAS_TERM 3 ; 2 HAS_TERM 4"},
    {37,
     "Papers about bayesian and electron which were written by authors at "
     "University170",
     5,
     "?P | T=bayesian | T=electron | A | O=University170 ; 0 HAS_TERM 1 ; "
     "0 HAS_TERM 2 ; 3 WRITES 0 ; 3 AFFILIATED_WITH 4"},
    {38,
     "Sources of papers, which were about eigenvalue and written by authors "
     "at University40",
     5,
     "?S | P | T=eigenvalue | A | O=University40 ; 0 PUBLISHES 1 ; "
     "1 HAS_TERM 2 ; 3 WRITES 1 ; 3 AFFILIATED_WITH 4"},
    {39,
     "Authors at University899, who wrote papers that were about classifier, "
     "which were published in Applied Intelligence",
     5,
     "?A | O=University899 | P | T=classifier | S=Applied Intelligence ; "
     "0 AFFILIATED_WITH 1 ; 0 WRITES 2 ; 2 HAS_TERM 3 ; 4 PUBLISHES 2"},
    {40,
     "Terms of papers that were published in Cybernetics and Systems Analysis "
     "and written by authors at University362",
     5,
     "?T | P | S=Cybernetics and Systems Analysis | A | O=University362 ; "
     "1 HAS_TERM 0 ; 2 PUBLISHES 1 ; 3 WRITES 1 ; 3 AFFILIATED_WITH 4"},
};

std::vector<SuiteQuery> build_queries() {
  std::vector<SuiteQuery> out;
  for (const Row& r : kRows) out.push_back({r.number, r.text, r.entities});
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t from = 0;
  while (true) {
    std::size_t at = s.find(sep, from);
    out.push_back(trim(s.substr(from, at - from)));
    if (at == std::string_view::npos) break;
    from = at + 1;
  }
  return out;
}

EntityType type_letter(char c) {
  switch (c) {
    case 'P': return EntityType::kPaper;
    case 'A': return EntityType::kAuthor;
    case 'T': return EntityType::kTerm;
    case 'S': return EntityType::kSource;
    case 'O': return EntityType::kOrganization;
  }
  throw std::invalid_argument(std::string("unknown type letter '") + c + "'");
}

const Row& row(int number) {
  for (const Row& r : kRows) {
    if (r.number == number) return r;
  }
  throw std::out_of_range("no suite query " + std::to_string(number));
}

}  // namespace

std::span<const SuiteQuery> suite_queries() {
  static const std::vector<SuiteQuery> queries = build_queries();
  return queries;
}

const SuiteQuery& suite_query(int number) {
  for (const SuiteQuery& q : suite_queries()) {
    if (q.number == number) return q;
  }
  throw std::out_of_range("no suite query " + std::to_string(number));
}

std::vector<DatasetRecord> suite_entities() {
  std::vector<DatasetRecord> out;
  for (const Row& r : kRows) {
    for (const GoldNode& n : parse_gold(r.gold).nodes) {
      if (!n.constraint) continue;
      bool seen = std::any_of(out.begin(), out.end(), [&](const auto& d) {
        return d.type == n.type && d.name == *n.constraint;
      });
      if (!seen) out.push_back({n.type, *n.constraint});
    }
  }
  return out;
}

GoldQuery parse_gold(std::string_view spec) {
  auto sections = split(spec, ';');
  GoldQuery out;
  for (std::string_view item : split(sections.front(), '|')) {
    GoldNode n;
    for (Part p : {Part::kCited, Part::kCiting}) {
      std::string prefix = std::string(to_string(p)) + ":";
      if (item.starts_with(prefix)) {
        n.part = p;
        item.remove_prefix(prefix.size());
      }
    }
    if (!item.empty() && item.front() == '?') {
      n.answer = true;
      item.remove_prefix(1);
    }
    if (item.empty()) throw std::invalid_argument("empty gold node");
    n.type = type_letter(item.front());
    if (item.size() > 1) {
      if (item[1] != '=') {
        throw std::invalid_argument("malformed gold node '" +
                                    std::string(item) + "'");
      }
      n.constraint = std::string(item.substr(2));
    }
    out.nodes.push_back(std::move(n));
  }
  for (std::size_t i = 1; i < sections.size(); ++i) {
    auto words = split(sections[i], ' ');
    if (words.size() != 3) {
      throw std::invalid_argument("malformed gold relation '" +
                                  std::string(sections[i]) + "'");
    }
    out.relations.push_back({std::stoul(std::string(words[0])),
                             std::stoul(std::string(words[2])),
                             std::string(words[1])});
    if (out.relations.back().source >= out.nodes.size() ||
        out.relations.back().target >= out.nodes.size()) {
      throw std::invalid_argument("gold relation '" + std::string(sections[i]) +
                                  "' names a missing node");
    }
  }
  if (std::count_if(out.nodes.begin(), out.nodes.end(),
                    [](const GoldNode& n) { return n.answer; }) != 1) {
    throw std::invalid_argument("gold query needs exactly one answer node");
  }
  return out;
}

GoldQuery gold_query(int number) { return parse_gold(row(number).gold); }

GraphQuery to_graph_query(const GoldQuery& gold) {
  GraphQuery q;
  for (const GoldNode& g : gold.nodes) {
    GraphNode n;
    n.type = g.type;
    n.part = g.part;
    n.is_class = !g.constraint.has_value();
    n.answer = g.answer;
    n.constraint = g.constraint;
    if (g.constraint) n.named_entity = *g.constraint;
    n.seq = q.nodes.size() + 1;
    n.instance = instance_name(n.part, n.is_class, n.type, n.seq);
    q.nodes.push_back(std::move(n));
  }
  for (const GoldRelation& r : gold.relations) {
    q.relations.push_back({r.source, r.target, r.label});
  }
  number_nodes(q);
  return q;
}

bool matches_gold(const GraphQuery& query, const GoldQuery& gold) {
  const std::size_t n = gold.nodes.size();
  if (query.nodes.size() != n || query.relations.size() != gold.relations.size()) {
    return false;
  }
  auto key = [](const GraphNode& g) {
    return GoldNode{g.type, g.part, g.answer, g.constraint};
  };

  using Edge = std::tuple<std::size_t, std::size_t, std::string>;
  std::vector<Edge> wanted;
  for (const GoldRelation& r : gold.relations) {
    wanted.emplace_back(r.source, r.target, r.label);
  }
  std::sort(wanted.begin(), wanted.end());

  // perm[query node] = gold node
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      ok = key(query.nodes[i]) == gold.nodes[perm[i]];
    }
    if (!ok) continue;
    std::vector<Edge> mapped;
    for (const GraphRelation& r : query.relations) {
      mapped.emplace_back(perm[r.source], perm[r.target], r.label);
    }
    std::sort(mapped.begin(), mapped.end());
    if (mapped == wanted) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace bibnli
