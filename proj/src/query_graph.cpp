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

#include "bibnli/query_graph.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <deque>
#include <limits>
#include <map>
#include <regex>
#include <stdexcept>

namespace bibnli {

namespace {

constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

std::vector<std::vector<std::size_t>> undirected_adjacency(
    const GraphQuery& q) {
  std::vector<std::vector<std::size_t>> adj(q.nodes.size());
  for (const GraphRelation& r : q.relations) {
    adj[r.source].push_back(r.target);
    adj[r.target].push_back(r.source);
  }
  return adj;
}

// Breadth-first distances from `start`; kUnset for unreachable nodes.
std::vector<std::size_t> bfs_order(const GraphQuery& q, std::size_t start,
                                   std::vector<std::size_t>* dist = nullptr) {
  auto adj = undirected_adjacency(q);
  std::vector<std::size_t> d(q.nodes.size(), kUnset);
  std::vector<std::size_t> order;
  std::deque<std::size_t> frontier{start};
  d[start] = 0;
  while (!frontier.empty()) {
    std::size_t n = frontier.front();
    frontier.pop_front();
    order.push_back(n);
    for (std::size_t m : adj[n]) {
      if (d[m] != kUnset) continue;
      d[m] = d[n] + 1;
      frontier.push_back(m);
    }
  }
  if (dist) *dist = std::move(d);
  return order;
}

GraphNode inserted_node(EntityType type, Part part, std::size_t seq) {
  GraphNode n;
  n.type = type;
  n.part = part;
  n.is_class = true;
  n.seq = seq;
  n.instance = instance_name(part, true, type, seq);
  return n;
}

bool mention_token(std::span<const Token> tokens, std::size_t i) {
  return i < tokens.size() && tokens[i].mention.has_value();
}

}  // namespace

std::size_t GraphQuery::answer() const {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].answer) return i;
  }
  throw std::logic_error("graph query has no answer node");
}

std::optional<std::size_t> GraphQuery::find(std::string_view instance) const {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].instance == instance) return i;
  }
  return std::nullopt;
}

std::string instance_name(Part part, bool is_class, EntityType type,
                          std::size_t seq) {
  std::string name(part_prefix(part));
  if (is_class) name += "Class_";
  name += to_string(type);
  name += '_';
  name += std::to_string(seq);
  return name;
}

std::vector<std::string> validate(const GraphQuery& query,
                                  const Schema& schema) {
  static const std::regex kName(
      "^(cited_|citing_)?(Class_)?(Paper|Author|Term|Source|Organization)_"
      "[0-9]+$");
  std::vector<std::string> problems;
  const auto& nodes = query.nodes;

  std::size_t answers = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const GraphNode& n = nodes[i];
    if (n.answer) ++answers;
    if (!std::regex_match(n.instance, kName)) {
      problems.push_back("malformed instance name '" + n.instance + "'");
    } else if (!n.instance.starts_with(part_prefix(n.part)) ||
               (n.part == Part::kMain &&
                (n.instance.starts_with("cited_") ||
                 n.instance.starts_with("citing_")))) {
      problems.push_back("instance '" + n.instance + "' has the wrong prefix");
    }
    if (n.constraint.has_value() == n.is_class) {
      problems.push_back("node '" + n.instance +
                         "' must carry a constraint iff it is an instance");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (nodes[j].instance == n.instance) {
        problems.push_back("duplicate instance name '" + n.instance + "'");
      }
    }
  }
  if (answers != 1) {
    problems.push_back("expected exactly one answer node, found " +
                       std::to_string(answers));
  }

  for (const GraphRelation& r : query.relations) {
    if (r.source >= nodes.size() || r.target >= nodes.size()) {
      problems.push_back("relation references a missing node");
      continue;
    }
    const EdgeType* e = schema.find_label(r.label);
    if (!e || e->source != nodes[r.source].type ||
        e->target != nodes[r.target].type) {
      problems.push_back("relation " + nodes[r.source].instance + " -" +
                         r.label + "-> " + nodes[r.target].instance +
                         " does not match the schema");
    }
  }
  if (!problems.empty() || nodes.empty()) return problems;

  std::vector<std::size_t> dist;
  bfs_order(query, 0, &dist);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (dist[i] == kUnset) {
      problems.push_back("node '" + nodes[i].instance +
                         "' is not connected to the rest of the query");
    }
  }
  return problems;
}

std::vector<MentionPair> select_graph_relations(const ParseResult& parse,
                                                std::span<const Token> tokens) {
  const auto& rels = parse.relations;

  // A non-entity token possessing an entity stands for that entity.
  auto resolve = [&](std::size_t i) -> std::optional<std::size_t> {
    if (mention_token(tokens, i)) return i;
    for (const DependencyRelation& r : rels) {
      if (r.code == DepCode::kNmodPoss && r.subject == i &&
          mention_token(tokens, r.object)) {
        return r.object;
      }
    }
    return std::nullopt;
  };

  std::vector<MentionPair> out;
  auto add = [&](std::size_t s, std::size_t o) {
    if (s == o) return;
    for (const MentionPair& p : out) {
      if ((p.subject == s && p.object == o) ||
          (p.subject == o && p.object == s)) {
        return;
      }
    }
    out.push_back({s, o});
  };

  for (const DependencyRelation& r : rels) {
    if (!r.subject) continue;
    if (r.code == DepCode::kConj) continue;
    if (r.code == DepCode::kAclRelcl) {
      auto head = resolve(*r.subject);
      if (!head) continue;
      std::size_t verb = r.object;
      for (const DependencyRelation& v : rels) {
        if (v.subject != verb) continue;
        if (v.code != DepCode::kNmod && v.code != DepCode::kDobj) continue;
        if (mention_token(tokens, v.object)) add(*head, v.object);
      }
      continue;
    }
    if (mention_token(tokens, *r.subject) && mention_token(tokens, r.object)) {
      add(*r.subject, r.object);
    }
  }
  return out;
}

std::size_t identify_answer(const ParseResult& parse,
                            std::span<const Token> tokens) {
  if (parse.root >= tokens.size() || !tokens[parse.root].mention) {
    std::string text =
        parse.root < tokens.size() ? tokens[parse.root].text : std::string();
    throw PipelineError(ErrorKind::kInterpretationFailure, Stage::kNodes,
                        "root token '" + text +
                            "' is not a bibliographic named entity",
                        text);
  }
  return *tokens[parse.root].mention;
}

std::vector<GraphNode> build_nodes(std::span<const PartMention> mentions,
                                   std::span<const Mention> all_mentions,
                                   std::size_t answer_mention) {
  std::vector<GraphNode> nodes;
  nodes.reserve(mentions.size());
  for (const PartMention& pm : mentions) {
    const Mention& m = all_mentions[pm.mention];
    GraphNode n;
    n.type = m.entry.type;
    n.part = pm.part;
    n.is_class = m.entry.is_class;
    n.answer = pm.mention == answer_mention;
    if (!m.entry.is_class) n.constraint = m.entry.canonical;
    n.named_entity = m.surface;
    n.mention = pm.mention;
    n.seq = nodes.size() + 1;
    n.instance = instance_name(n.part, n.is_class, n.type, n.seq);
    nodes.push_back(std::move(n));
  }
  return nodes;
}

Connection ensure_connected(std::span<const GraphNode> nodes,
                            std::span<const NodePair> pairs,
                            const Schema& schema) {
  Connection out;
  std::size_t next_seq = 0;
  for (const GraphNode& n : nodes) next_seq = std::max(next_seq, n.seq);

  for (const NodePair& p : pairs) {
    EntityType ta = nodes[p.a].type;
    EntityType tb = nodes[p.b].type;
    if (schema.adjacent(ta, tb)) {
      out.pairs.push_back(p);
      continue;
    }
    auto path = schema.shortest_path(ta, tb);
    if (!path) {
      throw PipelineError(
          ErrorKind::kUnsupportedQuery, Stage::kConnection,
          "no schema path between " + std::string(to_string(ta)) + " and " +
              std::string(to_string(tb)),
          nodes[p.b].named_entity);
    }
    std::size_t prev = p.a;
    for (std::size_t k = 1; k + 1 < path->size(); ++k) {
      std::size_t idx = nodes.size() + out.added.size();
      out.added.push_back(
          inserted_node((*path)[k], nodes[p.a].part, ++next_seq));
      out.pairs.push_back({prev, idx});
      prev = idx;
    }
    out.pairs.push_back({prev, p.b});
  }
  return out;
}

std::vector<GraphRelation> orient(std::span<const GraphNode> nodes,
                                  std::span<const NodePair> pairs,
                                  const Schema& schema) {
  std::vector<GraphRelation> out;
  out.reserve(pairs.size());
  for (const NodePair& p : pairs) {
    EntityType ta = nodes[p.a].type;
    EntityType tb = nodes[p.b].type;
    if (const EdgeType* e = schema.find_edge(ta, tb)) {
      out.push_back({p.a, p.b, e->label});
    } else if (const EdgeType* r = schema.find_edge(tb, ta)) {
      out.push_back({p.b, p.a, r->label});
    } else {
      throw PipelineError(ErrorKind::kUnsupportedQuery, Stage::kOrientation,
                          "no schema edge between " +
                              std::string(to_string(ta)) + " and " +
                              std::string(to_string(tb)));
    }
  }
  return out;
}

namespace {

// The Paper node of a fragment closest to its root, inserting one when the
// fragment has none.
std::size_t anchor_paper(QueryFragment& f, const Schema& schema) {
  std::vector<std::size_t> dist;
  bfs_order(f.graph, f.root, &dist);
  std::size_t best = kUnset;
  for (std::size_t i = 0; i < f.graph.nodes.size(); ++i) {
    if (f.graph.nodes[i].type != EntityType::kPaper || dist[i] == kUnset) {
      continue;
    }
    if (best == kUnset || dist[i] < dist[best]) best = i;
  }
  if (best != kUnset) return best;

  std::size_t next_seq = 0;
  for (const GraphNode& n : f.graph.nodes) next_seq = std::max(next_seq, n.seq);
  auto& nodes = f.graph.nodes;
  std::size_t paper = nodes.size();
  nodes.push_back(inserted_node(EntityType::kPaper, f.part, next_seq + 1));

  std::vector<NodePair> link{{f.root, paper}};
  Connection c = ensure_connected(nodes, link, schema);
  nodes.insert(nodes.end(), c.added.begin(), c.added.end());
  for (auto& r : orient(nodes, c.pairs, schema)) {
    f.graph.relations.push_back(std::move(r));
  }
  return paper;
}

}  // namespace

GraphQuery integrate_citation(const QueryFragment& cited,
                              const QueryFragment& citing,
                              const Schema& schema) {
  const EdgeType* cites =
      schema.find_edge(EntityType::kPaper, EntityType::kPaper);
  if (!cites) {
    throw PipelineError(ErrorKind::kUnsupportedQuery, Stage::kIntegration,
                        "schema has no Paper->Paper citation edge");
  }
  QueryFragment a = cited;
  QueryFragment b = citing;
  std::size_t cited_paper = anchor_paper(a, schema);
  std::size_t citing_paper = anchor_paper(b, schema);

  GraphQuery out = std::move(a.graph);
  std::size_t offset = out.nodes.size();
  for (GraphNode& n : b.graph.nodes) out.nodes.push_back(std::move(n));
  for (GraphRelation& r : b.graph.relations) {
    out.relations.push_back({r.source + offset, r.target + offset, r.label});
  }
  out.relations.push_back({citing_paper + offset, cited_paper, cites->label});
  return out;
}

void number_nodes(GraphQuery& query) {
  if (query.nodes.empty()) return;
  std::size_t start = 0;
  for (std::size_t i = 0; i < query.nodes.size(); ++i) {
    if (query.nodes[i].answer) {
      start = i;
      break;
    }
  }
  std::vector<std::size_t> order = bfs_order(query, start);
  std::vector<bool> placed(query.nodes.size(), false);
  for (std::size_t n : order) placed[n] = true;
  for (std::size_t i = 0; i < query.nodes.size(); ++i) {
    if (!placed[i]) order.push_back(i);
  }

  std::vector<std::size_t> new_index(query.nodes.size());
  std::vector<GraphNode> nodes;
  nodes.reserve(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    new_index[order[k]] = k;
    GraphNode n = std::move(query.nodes[order[k]]);
    n.seq = k + 1;
    n.instance = instance_name(n.part, n.is_class, n.type, n.seq);
    nodes.push_back(std::move(n));
  }
  for (GraphRelation& r : query.relations) {
    r.source = new_index[r.source];
    r.target = new_index[r.target];
  }
  query.nodes = std::move(nodes);
}

Compilation compile_traced(std::string_view query, const Dictionary& dict,
                           const Schema& schema,
                           const DependencyParser& parser) {
  using Clock = std::chrono::steady_clock;
  Compilation c;
  c.query = std::string(query);
  auto clock = Clock::now();
  auto lap = [&](Stage stage) {
    auto now = Clock::now();
    c.timings.push_back(
        {stage, std::chrono::duration<double, std::milli>(now - clock).count()});
    clock = now;
  };

  try {
    bool blank = std::all_of(query.begin(), query.end(), [](char ch) {
      return std::isspace(static_cast<unsigned char>(ch)) != 0;
    });
    if (blank) {
      throw PipelineError(ErrorKind::kInvalidQuery, Stage::kValidation,
                          "query is empty");
    }
    lap(Stage::kValidation);

    c.mentions = recognize(query, dict);
    lap(Stage::kRecognition);
    c.tokens = tokenize(query, c.mentions);
    lap(Stage::kTokenization);

    QueryParts split = split_citation(c.tokens);
    c.pivot = split.pivot;
    for (QueryPart& p : split.parts) {
      c.parts.push_back({p.role, std::move(p.tokens), std::nullopt, {}});
    }
    lap(Stage::kSplitting);

    for (PartAnalysis& p : c.parts) p.parse = parser.parse(p.tokens);
    lap(Stage::kParsing);

    for (PartAnalysis& p : c.parts) {
      p.pairs = select_graph_relations(*p.parse, p.tokens);
    }
    lap(Stage::kSelection);

    // The part holding the first token asks the question.
    std::size_t answer = identify_answer(*c.parts.front().parse,
                                         c.parts.front().tokens);
    std::vector<PartMention> part_mentions;
    for (const PartAnalysis& p : c.parts) {
      for (const Token& t : p.tokens) {
        if (t.mention) part_mentions.push_back({*t.mention, p.role});
      }
    }
    std::vector<GraphNode> nodes =
        build_nodes(part_mentions, c.mentions, answer);
    lap(Stage::kNodes);

    std::vector<QueryFragment> fragments;
    for (const PartAnalysis& p : c.parts) {
      QueryFragment f;
      f.part = p.role;
      std::map<std::size_t, std::size_t> local;  // mention -> fragment node
      for (const GraphNode& n : nodes) {
        if (n.part != p.role) continue;
        local[*n.mention] = f.graph.nodes.size();
        f.graph.nodes.push_back(n);
      }
      std::size_t root_mention = identify_answer(*p.parse, p.tokens);
      f.root = local.at(root_mention);

      std::vector<NodePair> pairs;
      for (const MentionPair& mp : p.pairs) {
        pairs.push_back({local.at(*p.tokens[mp.subject].mention),
                         local.at(*p.tokens[mp.object].mention)});
      }
      Connection conn = ensure_connected(f.graph.nodes, pairs, schema);
      f.graph.nodes.insert(f.graph.nodes.end(), conn.added.begin(),
                           conn.added.end());
      f.graph.relations = orient(f.graph.nodes, conn.pairs, schema);
      fragments.push_back(std::move(f));
    }
    lap(Stage::kConnection);

    GraphQuery graph;
    if (fragments.size() == 1) {
      graph = std::move(fragments.front().graph);
    } else {
      const QueryFragment* cited = nullptr;
      const QueryFragment* citing = nullptr;
      for (const QueryFragment& f : fragments) {
        (f.part == Part::kCited ? cited : citing) = &f;
      }
      graph = integrate_citation(*cited, *citing, schema);
    }
    number_nodes(graph);
    auto problems = validate(graph, schema);
    if (!problems.empty()) {
      throw PipelineError(ErrorKind::kInterpretationFailure,
                          Stage::kIntegration, problems.front());
    }
    lap(Stage::kIntegration);
    c.graph = std::move(graph);
  } catch (const PipelineError& e) {
    c.error = e;
  }
  return c;
}

GraphQuery compile(std::string_view query, const Dictionary& dict,
                   const Schema& schema) {
  Compilation c = compile_traced(query, dict, schema);
  if (c.error) throw *c.error;
  return std::move(*c.graph);
}

}  // namespace bibnli
