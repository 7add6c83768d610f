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


// Acceptance checks: one PASS/FAIL line per criterion. Exits nonzero when
// any check fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "bibnli/query_suite.hpp"
#include "bibnli/cnl_parser.hpp"
#include "bibnli/cypher_reader.hpp"
#include "bibnli/emitter.hpp"
#include "bibnli/graph_store.hpp"
#include "bibnli/lexicon.hpp"
#include "bibnli/query_graph.hpp"
#include "bibnli/service.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"
#include "support/random_graph.hpp"

namespace bibnli::testing {
namespace {

using Clock = std::chrono::steady_clock;
using Triple = std::tuple<std::string, std::string, std::string>;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects failed expectations for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  const std::vector<std::string>& failures() const { return failures_; }
  std::size_t total() const { return total_; }

 private:
  std::vector<std::string> failures_;
  std::size_t total_ = 0;
};

Dictionary worked_dictionary() {
  std::vector<DatasetRecord> records = {
      {EntityType::kTerm, "information retrieval"},
      {EntityType::kTerm, "data mining"},
      {EntityType::kAuthor, "John"},
      {EntityType::kOrganization, "happy university"},
  };
  return build_dictionary(records);
}

std::vector<Triple> triples(std::string_view q, const Dictionary& dict) {
  auto tokens = tokenize(q, recognize(q, dict));
  std::vector<Triple> out;
  for (const auto& row : dependency_table(parse(tokens), tokens)) {
    out.emplace_back(row.subject, row.object, row.code);
  }
  return out;
}

std::vector<std::string> edge_strings(const GraphQuery& q) {
  std::vector<std::string> out;
  for (const GraphRelation& r : q.relations) {
    out.push_back(q.nodes[r.source].instance + " " + r.label + " " +
                  q.nodes[r.target].instance);
  }
  return out;
}

std::string gold_ir(Check& c) {
  const Schema& schema = default_schema();
  Dictionary dict = build_dictionary(suite_entities());
  auto start = Clock::now();
  int correct = 0;
  std::string misses;
  for (const SuiteQuery& a : suite_queries()) {
    bool ok = false;
    try {
      ok = matches_gold(compile(a.text, dict, schema), gold_query(a.number));
    } catch (const PipelineError&) {
    }
    correct += ok;
    if (!ok) misses += " " + std::to_string(a.number);
  }
  double s = seconds_since(start);
  c.expect(correct >= 39, "fewer than 39 gold matches");
  c.expect(s < 5.0, "suite took " + std::to_string(s) + " s");
  std::ostringstream out;
  out << correct << "/40 gold graphs, " << s << " s";
  if (!misses.empty()) out << ", mismatched:" << misses;
  return out.str();
}

std::string worked_examples(Check& c) {
  const Schema& schema = default_schema();
  Dictionary dict = worked_dictionary();

  std::string t1 = "papers about information retrieval and data mining";
  std::vector<std::string> tokens;
  for (const Token& t : tokenize(t1, recognize(t1, dict))) tokens.push_back(t.text);
  c.expect(tokens == std::vector<std::string>{"papers", "about", "information retrieval",
                                              "and", "data mining"},
           "retrieval query tokens");

  c.expect(triples(t1, dict) ==
               std::vector<Triple>{{"", "papers", "root"},
                                   {"information retrieval", "about", "case"},
                                   {"papers", "information retrieval", "nmod"},
                                   {"information retrieval", "and", "cc"},
                                   {"papers", "data mining", "nmod"},
                                   {"information retrieval", "data mining", "conj"}},
           "coordination relations");
  c.expect(triples("papers that were written by John", dict) ==
               std::vector<Triple>{{"", "papers", "root"},
                                   {"written", "papers", "nsubjpass"},
                                   {"papers", "that", "ref"},
                                   {"written", "were", "auxpass"},
                                   {"papers", "written", "acl:relcl"},
                                   {"John", "by", "case"},
                                   {"written", "John", "nmod"}},
           "passive clause relations");

  GraphQuery citation =
      compile("papers that were cited by papers that were written by John", dict, schema);
  bool names_ok = citation.nodes.size() == 3 && citation.nodes[0].instance == "cited_Class_Paper_1" &&
               citation.nodes[0].answer && !citation.nodes[0].constraint &&
               citation.nodes[1].instance == "citing_Class_Paper_2" && !citation.nodes[1].answer &&
               !citation.nodes[1].constraint && citation.nodes[2].instance == "citing_Author_3" &&
               !citation.nodes[2].answer && citation.nodes[2].constraint == "John";
  c.expect(names_ok, "citation node names");

  GraphQuery expanded = compile("papers by happy university", dict, schema);
  c.expect(edge_strings(expanded) ==
               std::vector<std::string>{"Class_Author_2 WRITES Class_Paper_1",
                                        "Class_Author_2 AFFILIATED_WITH Organization_3"},
           "organization expansion");

  GraphQuery integrated = compile("authors cited by John", dict, schema);
  c.expect(edge_strings(integrated) ==
               std::vector<std::string>{
                   "cited_Class_Author_1 WRITES cited_Class_Paper_2",
                   "citing_Author_4 WRITES citing_Class_Paper_3",
                   "citing_Class_Paper_3 CITES cited_Class_Paper_2"},
           "citation integration");

  GraphQuery cited_by = compile("authors that were cited by John", dict, schema);
  const GraphNode& answer = cited_by.nodes[cited_by.answer()];
  auto john = cited_by.find("citing_Author_4");
  c.expect(cited_by.nodes.size() == 4 && cited_by.relations.size() == 3, "cited-by-John size");
  c.expect(john && cited_by.nodes[*john].constraint == "John", "cited-by-John constraint");
  c.expect(answer.part == Part::kCited && answer.type == EntityType::kAuthor &&
               answer.seq == 1 && answer.instance == "cited_Class_Author_1",
           "cited-by-John answer");
  return "tokens, relations, node names, expansion, integration (answer " + answer.instance + ")";
}

std::string ner_contract(Check& c) {
  std::vector<DatasetRecord> records = {{EntityType::kTerm, "Information Systems"}};
  auto ms = recognize("papers on Information System", build_dictionary(records));
  c.expect(ms.size() == 2 && ms[1].entry.canonical == "Information Systems" &&
               ms[1].distance == 1,
           "Information System at distance 1");

  std::mt19937_64 rng(2024);
  auto word = [&](std::size_t lo, std::size_t hi, std::string_view letters) {
    std::string w;
    std::size_t n = lo + rng() % (hi - lo + 1);
    for (std::size_t i = 0; i < n; ++i) w += letters[rng() % letters.size()];
    return w;
  };
  int found = 0;
  std::size_t checked = 0;
  bool bounded = true;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<DatasetRecord> recs;
    for (int k = 0; k < 30; ++k) {
      std::string name = word(4, 9, "bdfgklmnprstvz");
      if (rng() % 3 == 0) name += " " + word(4, 8, "aeiou");
      recs.push_back({kAllEntityTypes[rng() % kNumEntityTypes], name});
    }
    Dictionary dict = build_dictionary(recs);
    const std::string& key = recs[rng() % recs.size()].name;
    std::string query = "qx " + key + " zq " + word(3, 7, "abcdeklmn");
    for (const Mention& m : recognize(query, dict)) {
      ++checked;
      bounded = bounded && m.distance <= 1 &&
                edit_distance(fold_ascii(m.surface), fold_ascii(m.entry.canonical.empty()
                                                                    ? m.surface
                                                                    : m.entry.canonical)) <= 1;
      if (m.start == 3 && m.end == 3 + key.size() && m.distance == 0) ++found;
    }
  }
  c.expect(found == 100, "planted keys found: " + std::to_string(found));
  c.expect(bounded, "a match exceeded distance 1");
  return std::to_string(found) + "/100 planted keys at distance 0, " +
         std::to_string(checked) + " mentions within distance 1";
}

std::string executor_soundness(Check& c) {
  auto start = Clock::now();
  const PropertyGraph& g = desk_graph();
  int gold_equal = 0;
  for (const SuiteQuery& a : suite_queries()) {
    GraphQuery q = to_graph_query(gold_query(a.number));
    bool eq = row_ids(execute(q, g)) == oracle(q, g);
    gold_equal += eq;
    c.expect(eq, "gold query " + std::to_string(a.number));
  }
  std::mt19937_64 rng(20261016);
  PropertyGraph small = PropertyGraph::build(
      random_dataset(rng, default_schema(), 200, 450), default_schema());
  int random_equal = 0;
  for (int i = 0; i < 100; ++i) {
    GraphQuery q = random_query(rng, default_schema());
    bool eq = row_ids(execute(q, small)) == oracle(q, small);
    random_equal += eq;
    c.expect(eq, "random query " + std::to_string(i));
  }
  double s = seconds_since(start);
  c.expect(s < 60.0, "took " + std::to_string(s) + " s");
  std::ostringstream out;
  out << gold_equal << "/40 gold, " << random_equal << "/100 random equal to oracle, " << s
      << " s";
  return out.str();
}

std::string end_to_end(Check& c) {
  const PropertyGraph& g = desk_graph();
  std::size_t min_rows = SIZE_MAX;
  int answered = 0;
  for (const SuiteQuery& a : suite_queries()) {
    std::size_t rows = 0;
    try {
      rows = execute(compile(a.text, desk_dictionary(), default_schema()), g).match_count;
    } catch (const PipelineError&) {
    }
    answered += rows >= 1;
    min_rows = std::min(min_rows, rows);
    c.expect(rows >= 1, "query " + std::to_string(a.number) + " has no rows");
  }
  std::size_t walkthrough =
      execute(compile(suite_query(31).text, desk_dictionary(), default_schema()), g)
          .match_count;
  c.expect(walkthrough == 3, "query 31 returned " + std::to_string(walkthrough));
  return std::to_string(answered) + "/40 answered (min " + std::to_string(min_rows) +
         " rows), query 31 " + std::to_string(walkthrough) + " rows";
}

std::string timing(Check& c) {
  Engine engine(default_schema(), desk_graph());
  BenchReport report = run_bench(engine, 3);
  double worst = 0;
  for (const BenchQuery& q : report.queries) {
    worst = std::max(worst, q.max_total_ms);
    c.expect(q.max_total_ms < 250.0, "query " + std::to_string(q.number) + " slow");
  }
  c.expect(report.groups.size() == 4, "four groups");
  std::ostringstream out;
  out << "means";
  for (const BenchGroup& grp : report.groups) {
    c.expect(grp.total == 10, "group size");
    double sum = 0;
    std::size_t n = 0;
    for (const BenchQuery& q : report.queries) {
      if (q.entities == grp.entities && q.correct) {
        sum += q.total_ms;
        ++n;
      }
    }
    c.expect(n == grp.correct && grp.mean_ms.has_value() == (n > 0), "group counts");
    if (grp.mean_ms) {
      c.expect(std::abs(*grp.mean_ms - sum / n) < 1e-9, "group mean");
      out << " " << grp.entities << ":" << *grp.mean_ms << "ms(" << grp.correct << "/"
          << grp.total << ")";
    }
  }
  out << ", worst " << worst << " ms";
  return out.str();
}

std::string round_trip(Check& c) {
  const PropertyGraph& g = desk_graph();
  int equal = 0;
  for (const SuiteQuery& a : suite_queries()) {
    GraphQuery q = to_graph_query(gold_query(a.number));
    bool eq = false;
    try {
      eq = row_ids(execute(read_cypher(emit(q).text), g)) == row_ids(execute(q, g));
    } catch (const std::exception&) {
    }
    equal += eq;
    c.expect(eq, "query " + std::to_string(a.number));
  }
  return std::to_string(equal) + "/40 emitted queries equal to direct execution";
}

int run() {
  struct Criterion {
    const char* name;
    std::function<std::string(Check&)> fn;
  };
  const Criterion criteria[] = {
      {"gold-ir-correctness", gold_ir},
      {"worked-example-fidelity", worked_examples},
      {"ner-contract", ner_contract},
      {"executor-soundness", executor_soundness},
      {"end-to-end-answers", end_to_end},
      {"timing-methodology", timing},
      {"round-trip-emission", round_trip},
  };
  int failed = 0;
  for (const Criterion& cr : criteria) {
    Check c;
    std::string detail;
    try {
      detail = cr.fn(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::printf("%s %s: %s\n", c.ok() ? "PASS" : "FAIL", cr.name, detail.c_str());
    for (const std::string& f : c.failures()) std::printf("    %s\n", f.c_str());
    failed += !c.ok();
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}

}  // namespace
}  // namespace bibnli::testing

int main() { return bibnli::testing::run(); }
