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


#include <set>
#include <string>
#include <thread>
#include <vector>

#include "bibnli/query_suite.hpp"
#include "bibnli/service.hpp"
#include "doctest.h"
#include "httplib.h"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace bibnli;
using namespace bibnli::testing;
using nlohmann::json;

namespace {

const Engine& engine() {
  static const Engine e(Schema::default_schema(), desk_graph());
  return e;
}

const std::string& walkthrough() { return suite_query(31).text; }

json without_timings(json doc) {
  doc.erase("timings_ms");
  return doc;
}

std::set<std::string> result_ids(const json& search) {
  std::set<std::string> out;
  for (const json& r : search["results"]["rows"]) out.insert(r["id"].get<std::string>());
  return out;
}

}  // namespace

TEST_CASE("analysis of the walkthrough query") {
  json a = engine().analyze(walkthrough());
  CHECK(a["ok"] == true);
  CHECK(a["error"].is_null());
  std::vector<std::string> surfaces;
  for (const json& m : a["mentions"]) surfaces.push_back(m["surface"]);
  CHECK(surfaces == std::vector<std::string>{"Papers", "classification", "Asoke K. Nandi",
                                             "papers", "Pattern Recognition"});
  REQUIRE(a["parts"].size() == 2);
  CHECK(a["parts"][0]["role"] == "cited");
  CHECK(a["parts"][1]["role"] == "citing");
  CHECK(a["pivot"] == "cited");
  CHECK(a["nodes"].size() == 5);
  CHECK(a["relations"].size() == 4);
  std::size_t answers = 0;
  for (const json& n : a["nodes"]) {
    answers += n["answer"].get<bool>();
    if (!n["inserted"].get<bool>()) CHECK(n["mention"].is_number());
  }
  CHECK(answers == 1);
  CHECK(a["query_text"]["dialect"] == "cypher");
  CHECK(a["query_text"]["text"].get<std::string>().find("[:CITES]") != std::string::npos);
  std::set<std::string> stages;
  for (const json& t : a["timings_ms"]) stages.insert(t["stage"]);
  CHECK(stages.count("parsing") == 1);
  CHECK(stages.count("emission") == 1);
}

TEST_CASE("empty query is rejected at validation") {
  json a = engine().analyze("");
  CHECK(a["ok"] == false);
  CHECK(a["error"]["kind"] == "InvalidQuery");
  CHECK(a["error"]["stage"] == "validation");
  CHECK(a["nodes"].empty());
}

TEST_CASE("query 30 answers Authors") {
  json a = engine().analyze(suite_query(30).text);
  REQUIRE(a["ok"] == true);
  bool found = false;
  for (const json& n : a["nodes"]) {
    if (n["answer"].get<bool>()) {
      CHECK(n["named_entity"] == "Authors");
      CHECK(n["type"] == "Author");
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("stages before a failure are populated") {
  json a = engine().analyze("papers about about clustering");
  CHECK(a["ok"] == false);
  CHECK(a["error"]["stage"] == "parsing");
  CHECK(a["error"]["token"] == "about");
  CHECK(a["mentions"].size() == 2);
  CHECK(a["tokens"].size() == 4);
  CHECK(a["nodes"].empty());
  CHECK(a["query_text"].is_null());
}

TEST_CASE("analyze is idempotent") {
  for (const SuiteQuery& q : suite_queries()) {
    CHECK(without_timings(engine().analyze(q.text)) ==
          without_timings(engine().analyze(q.text)));
  }
}

TEST_CASE("engine without a dataset") {
  Engine bare(Schema::default_schema());
  CHECK(bare.graph() == nullptr);
  json a = bare.analyze("papers");
  CHECK(a["ok"] == true);
  CHECK(a["nodes"].size() == 1);
  CHECK_THROWS_AS(bare.search("papers"), DataError);
  CHECK_THROWS_AS(Engine::open({"/nonexistent/bibnli", std::nullopt}), DataError);
}

TEST_CASE("search results") {
  json s = engine().search("papers");
  CHECK(s["results"]["match_count"] == desk_graph().count(EntityType::kPaper));

  json q1 = engine().search(suite_query(1).text);
  std::set<std::string> expected;
  const PropertyGraph& g = desk_graph();
  std::size_t salton = g.named(EntityType::kAuthor, "Gerard Salton").front();
  for (std::size_t e : g.out_edges(salton)) {
    if (g.labels()[g.edges()[e].label] == "WRITES") {
      expected.insert(g.entities()[g.edges()[e].target].id);
    }
  }
  CHECK(!expected.empty());
  CHECK(result_ids(q1) == expected);
  CHECK(result_ids(q1) == oracle(to_graph_query(gold_query(1)), g));

  json fig = engine().search(walkthrough());
  CHECK(fig["results"]["match_count"] == 3);
  json limited = engine().search("papers", 5);
  CHECK(limited["results"]["rows"].size() == 5);
  CHECK(limited["results"]["match_count"] == desk_graph().count(EntityType::kPaper));

  for (const SuiteQuery& q : suite_queries()) {
    CAPTURE(q.number);
    json r = engine().search(q.text);
    CHECK(r["analysis"]["ok"] == true);
    CHECK(r["results"]["match_count"].get<std::size_t>() >= 1);
  }
}

TEST_CASE("HTTP round trip") {
  HttpServer server(engine());
  int port = server.bind("127.0.0.1", 0);
  REQUIRE(port > 0);
  std::thread t([&] { server.serve(); });
  httplib::Client client("127.0.0.1", port);
  client.set_read_timeout(10, 0);

  auto health = client.Get("/health");
  REQUIRE(health);
  CHECK(health->status == 200);
  CHECK(json::parse(health->body)["graph"]["entities"] == desk_graph().entities().size());

  auto schema = client.Get("/schema");
  REQUIRE(schema);
  CHECK(json::parse(schema->body)["edges"].size() == 5);

  auto ok = client.Post("/analyze", json{{"query", "papers"}}.dump(), "application/json");
  REQUIRE(ok);
  CHECK(ok->status == 200);
  CHECK(json::parse(ok->body)["nodes"].size() == 1);

  auto bad = client.Post("/analyze", json{{"query", ""}}.dump(), "application/json");
  REQUIRE(bad);
  CHECK(bad->status == 400);
  CHECK(json::parse(bad->body)["error"]["stage"] == "validation");

  auto garbage = client.Post("/analyze", "{not json", "application/json");
  REQUIRE(garbage);
  CHECK(garbage->status == 400);
  CHECK(json::parse(garbage->body)["error"]["kind"] == "InvalidRequest");

  auto missing = client.Post("/search", json{{"text", "papers"}}.dump(), "application/json");
  REQUIRE(missing);
  CHECK(missing->status == 400);

  auto search = client.Post("/search", json{{"query", walkthrough()}}.dump(), "application/json");
  REQUIRE(search);
  CHECK(search->status == 200);
  json body = json::parse(search->body);
  CHECK(body["results"]["rows"].size() == 3);
  CHECK(body["analysis"]["nodes"].size() == 5);

  auto options = client.Options("/analyze");
  REQUIRE(options);
  CHECK(options->status == 204);

  server.stop();
  t.join();
}

TEST_CASE("HTTP search without a dataset") {
  Engine bare(Schema::default_schema());
  HttpServer server(bare);
  int port = server.bind("127.0.0.1", 0);
  REQUIRE(port > 0);
  std::thread t([&] { server.serve(); });
  httplib::Client client("127.0.0.1", port);
  auto r = client.Post("/search", json{{"query", "papers"}}.dump(), "application/json");
  REQUIRE(r);
  CHECK(r->status == 503);
  auto a = client.Post("/analyze", json{{"query", "papers"}}.dump(), "application/json");
  REQUIRE(a);
  CHECK(a->status == 200);
  server.stop();
  t.join();
}

TEST_CASE("bench report") {
  BenchReport report = run_bench(engine(), 1);
  CHECK(report.runs == 1);
  REQUIRE(report.queries.size() == 40);
  REQUIRE(report.groups.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    const BenchGroup& g = report.groups[i];
    CHECK(g.entities == i + 2);
    CHECK(g.total == 10);
    CHECK(g.correct == 10);
    REQUIRE(g.mean_ms);
    double sum = 0;
    for (const BenchQuery& q : report.queries) {
      if (q.entities == g.entities && q.correct) sum += q.total_ms;
    }
    CHECK(*g.mean_ms == doctest::Approx(sum / 10));
  }
  for (const BenchQuery& q : report.queries) {
    CHECK(q.correct);
    CHECK(q.rows >= 1);
    CHECK(q.max_total_ms < 250.0);
  }
  json j = report.to_json();
  CHECK(j["groups"].size() == 4);
  CHECK(report.to_text().find("5") != std::string::npos);
}
