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


#include "bibnli/service.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "bibnli/query_suite.hpp"
#include "bibnli/error.hpp"

namespace bibnli {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

std::string table(const std::vector<std::string>& header,
                  const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) {
      width[i] = std::max(width[i], r[i].size());
    }
  }
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < width.size(); ++i) {
      std::string cell = i < cells.size() ? cells[i] : "";
      out << "  " << cell;
      if (i + 1 < width.size()) out << std::string(width[i] - cell.size(), ' ');
    }
    out << '\n';
  };
  line(header);
  std::vector<std::string> rule;
  for (std::size_t w : width) rule.push_back(std::string(w, '-'));
  line(rule);
  for (const auto& r : rows) line(r);
  return out.str();
}

std::string str(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "Yes" : "No";
  return v.dump();
}

std::string fixed(double v, int digits = 3) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(digits);
  out << v;
  return out.str();
}

}  // namespace

Engine::Engine(Schema schema, std::optional<PropertyGraph> graph)
    : schema_(std::move(schema)), graph_(std::move(graph)) {
  if (graph_) {
    dict_ = build_dictionary(graph_->dictionary_records());
  } else {
    dict_ = build_dictionary({});
  }
}

Engine Engine::open(const EngineConfig& config) {
  Schema schema =
      config.schema ? Schema::load(*config.schema) : Schema::default_schema();
  std::optional<PropertyGraph> graph;
  if (config.data) graph = ingest(*config.data, schema);
  return Engine(std::move(schema), std::move(graph));
}

Compilation Engine::compile(std::string_view query) const {
  return compile_traced(query, dict_, schema_);
}

json to_json(const PipelineError& e) {
  return {{"kind", to_string(e.kind())},
          {"stage", to_string(e.stage())},
          {"message", e.what()},
          {"token", e.token().empty() ? json() : json(e.token())}};
}

json to_json(const Compilation& c) {
  json mentions = json::array();
  for (const Mention& m : c.mentions) {
    mentions.push_back({{"start", m.start},
                        {"end", m.end},
                        {"surface", m.surface},
                        {"type", to_string(m.entry.type)},
                        {"is_class", m.entry.is_class},
                        {"value", m.entry.serialized_value()},
                        {"canonical", m.entry.is_class ? json()
                                                       : json(m.entry.canonical)},
                        {"distance", m.distance}});
  }
  json tokens = json::array();
  for (const Token& t : c.tokens) {
    tokens.push_back({{"index", t.index},
                      {"text", t.text},
                      {"mention", t.mention ? json(*t.mention) : json()}});
  }
  json parts = json::array();
  for (const PartAnalysis& p : c.parts) {
    json indices = json::array();
    for (const Token& t : p.tokens) indices.push_back(t.index);
    json deps = json::array();
    if (p.parse) {
      for (const DependencyRow& r : dependency_table(*p.parse, p.tokens)) {
        deps.push_back({{"order", r.order},
                        {"subject", r.subject},
                        {"object", r.object},
                        {"code", r.code},
                        {"name", r.name}});
      }
    }
    json pairs = json::array();
    for (const MentionPair& mp : p.pairs) {
      pairs.push_back({{"subject", p.tokens[mp.subject].text},
                       {"object", p.tokens[mp.object].text}});
    }
    parts.push_back({{"role", to_string(p.role)},
                     {"tokens", indices},
                     {"dependencies", p.parse ? deps : json()},
                     {"graph_relations", pairs}});
  }

  json nodes = json::array();
  json relations = json::array();
  json emitted;
  if (c.graph) {
    for (const GraphNode& n : c.graph->nodes) {
      nodes.push_back({{"named_entity", n.named_entity},
                       {"instance", n.instance},
                       {"type", to_string(n.type)},
                       {"part", to_string(n.part)},
                       {"answer", n.answer},
                       {"constraint_node", n.constraint.has_value()},
                       {"constraint", n.constraint ? json(*n.constraint) : json()},
                       {"inserted", !n.mention.has_value()},
                       {"mention", n.mention ? json(*n.mention) : json()}});
    }
    for (const GraphRelation& r : c.graph->relations) {
      relations.push_back({{"source", c.graph->nodes[r.source].instance},
                           {"target", c.graph->nodes[r.target].instance},
                           {"label", r.label}});
    }
  }
  json timings = json::array();
  for (const StageTiming& t : c.timings) {
    timings.push_back({{"stage", to_string(t.stage)}, {"ms", t.ms}});
  }
  return {{"query", c.query},
          {"ok", c.ok()},
          {"mentions", mentions},
          {"tokens", tokens},
          {"pivot", c.pivot ? json(c.pivot->text) : json()},
          {"parts", parts},
          {"nodes", nodes},
          {"relations", relations},
          {"query_text", emitted},
          {"error", c.error ? to_json(*c.error) : json()},
          {"timings_ms", timings}};
}

json to_json(const ResultSet& rs, std::size_t limit) {
  json rows = json::array();
  std::size_t shown = limit ? std::min(limit, rs.rows.size()) : rs.rows.size();
  for (std::size_t i = 0; i < shown; ++i) {
    const ResultRow& r = rs.rows[i];
    rows.push_back({{"id", r.id}, {"name", r.name}, {"type", to_string(r.type)}});
  }
  json timings = json::array();
  for (const auto& [stage, ms] : rs.timings_ms) {
    timings.push_back({{"stage", stage}, {"ms", ms}});
  }
  return {{"rows", rows},
          {"match_count", rs.match_count},
          {"truncated", shown < rs.rows.size()},
          {"timings_ms", timings}};
}

json Engine::analyze(std::string_view query) const {
  Compilation c = compile(query);
  std::optional<EmittedQuery> emitted;
  double emit_ms = 0.0;
  if (c.ok()) {
    auto start = Clock::now();
    emitted = emit(*c.graph);
    emit_ms = ms_since(start);
  }
  json doc = to_json(c);
  if (emitted) {
    doc["query_text"] = {{"dialect", emitted->dialect}, {"text", emitted->text}};
    doc["timings_ms"].push_back(
        {{"stage", to_string(Stage::kEmission)}, {"ms", emit_ms}});
  }
  return doc;
}

json Engine::search(std::string_view query, std::size_t limit) const {
  if (!graph_) throw DataError("no dataset loaded; pass --data <dir>");
  auto start = Clock::now();
  Compilation c = compile(query);
  json doc;
  json results;
  if (c.ok()) {
    ResultSet rs = execute(*c.graph, *graph_);
    results = to_json(rs, limit);
    doc = to_json(c);
    EmittedQuery emitted = emit(*c.graph);
    doc["query_text"] = {{"dialect", emitted.dialect}, {"text", emitted.text}};
  } else {
    doc = to_json(c);
  }
  return {{"analysis", doc}, {"results", results}, {"total_ms", ms_since(start)}};
}

std::string render_analysis(const json& a) {
  std::ostringstream out;
  out << "Query: " << str(a["query"]) << "\n\n";

  std::vector<std::vector<std::string>> rows;
  for (const json& m : a["mentions"]) {
    rows.push_back({str(m["surface"]), str(m["value"]), str(m["canonical"]),
                    std::to_string(m["distance"].get<int>())});
  }
  out << "Named entities\n"
      << table({"Surface", "Value", "Canonical", "Distance"}, rows) << '\n';

  std::string tokens;
  for (const json& t : a["tokens"]) {
    if (!tokens.empty()) tokens += ", ";
    tokens += "(" + str(t["text"]) + ")";
  }
  out << "Tokens: " << tokens << "\n\n";

  for (const json& p : a["parts"]) {
    if (p["dependencies"].is_null()) continue;
    rows.clear();
    for (const json& d : p["dependencies"]) {
      rows.push_back({std::to_string(d["order"].get<std::size_t>()),
                      str(d["subject"]), str(d["object"]), str(d["code"]),
                      str(d["name"])});
    }
    out << "Dependency relations (" << str(p["role"]) << ")\n"
        << table({"Order", "Subject", "Object", "Relation Code",
                  "Relation Name"},
                 rows)
        << '\n';
  }

  if (!a["nodes"].empty()) {
    rows.clear();
    for (const json& n : a["nodes"]) {
      rows.push_back({str(n["named_entity"]), str(n["instance"]),
                      str(n["answer"]), str(n["constraint_node"])});
    }
    out << "Graph nodes\n"
        << table({"Named Entity", "Instance", "Answer Node", "Constraint Node"},
                 rows)
        << '\n';
    out << "Graph relations\n";
    for (const json& r : a["relations"]) {
      out << "  " << str(r["source"]) << " -" << str(r["label"]) << "-> "
          << str(r["target"]) << '\n';
    }
    out << '\n';
  }
  if (a["query_text"].is_object()) {
    out << "Graph query (" << str(a["query_text"]["dialect"]) << ")\n"
        << str(a["query_text"]["text"]) << "\n\n";
  }
  if (!a["error"].is_null()) {
    const json& e = a["error"];
    out << "Error: " << str(e["kind"]) << " at stage " << str(e["stage"])
        << ": " << str(e["message"]) << '\n';
  }
  double total = 0.0;
  for (const json& t : a["timings_ms"]) total += t["ms"].get<double>();
  out << "Interpretation time: " << fixed(total) << " ms\n";
  return out.str();
}

std::string render_results(const json& r) {
  std::ostringstream out;
  std::vector<std::vector<std::string>> rows;
  for (const json& row : r["rows"]) {
    rows.push_back({str(row["id"]), str(row["type"]), str(row["name"])});
  }
  out << "Results (" << r["match_count"].get<std::size_t>() << " matched";
  if (r["truncated"].get<bool>()) out << ", " << rows.size() << " shown";
  out << ")\n";
  if (rows.empty()) {
    out << "  no entries matched\n";
  } else {
    out << table({"Id", "Type", "Name"}, rows);
  }
  return out.str();
}

json BenchReport::to_json() const {
  json qs = json::array();
  for (const BenchQuery& q : queries) {
    qs.push_back({{"number", q.number},
                  {"entities", q.entities},
                  {"correct", q.correct},
                  {"interpret_ms", q.interpret_ms},
                  {"execute_ms", q.execute_ms},
                  {"total_ms", q.total_ms},
                  {"max_total_ms", q.max_total_ms},
                  {"rows", q.rows},
                  {"error", q.error.empty() ? json() : json(q.error)}});
  }
  json gs = json::array();
  for (const BenchGroup& g : groups) {
    gs.push_back({{"entities", g.entities},
                  {"correct", g.correct},
                  {"total", g.total},
                  {"mean_ms", g.mean_ms ? json(*g.mean_ms) : json()}});
  }
  return {{"runs", runs}, {"queries", qs}, {"groups", gs}};
}

std::string BenchReport::to_text() const {
  std::vector<std::vector<std::string>> rows;
  for (const BenchQuery& q : queries) {
    rows.push_back({std::to_string(q.number), std::to_string(q.entities),
                    q.correct ? "yes" : "no", fixed(q.interpret_ms),
                    fixed(q.execute_ms), fixed(q.total_ms),
                    std::to_string(q.rows)});
  }
  std::ostringstream out;
  out << "Runs per query: " << runs << "\n"
      << table({"Query", "Entities", "Correct", "Interpret ms", "Execute ms",
                "Total ms", "Rows"},
               rows)
      << '\n';
  rows.clear();
  for (const BenchGroup& g : groups) {
    rows.push_back({std::to_string(g.entities),
                    std::to_string(g.correct) + "/" + std::to_string(g.total),
                    g.mean_ms ? fixed(*g.mean_ms) : "n/a"});
  }
  out << table({"Named entities", "Correct", "Mean ms"}, rows);
  return out.str();
}

BenchReport run_bench(const Engine& engine, std::size_t runs) {
  if (!engine.graph()) throw DataError("bench needs a dataset");
  runs = std::max<std::size_t>(runs, 1);
  BenchReport report;
  report.runs = runs;
  for (const SuiteQuery& q : suite_queries()) {
    BenchQuery b;
    b.number = q.number;
    b.entities = q.entity_count;
    for (std::size_t run = 0; run < runs; ++run) {
      auto start = Clock::now();
      Compilation c = engine.compile(q.text);
      double interpret = ms_since(start);
      double exec = 0.0;
      if (c.ok()) {
        auto exec_start = Clock::now();
        ResultSet rs = execute(*c.graph, *engine.graph());
        exec = ms_since(exec_start);
        b.rows = rs.match_count;
        b.correct = matches_gold(*c.graph, gold_query(q.number));
      } else {
        b.error = c.error->what();
        b.correct = false;
      }
      b.interpret_ms += interpret / runs;
      b.execute_ms += exec / runs;
      b.max_total_ms = std::max(b.max_total_ms, interpret + exec);
    }
    b.total_ms = b.interpret_ms + b.execute_ms;
    report.queries.push_back(std::move(b));
  }
  for (std::size_t n = 2; n <= 5; ++n) {
    BenchGroup g;
    g.entities = n;
    double sum = 0.0;
    for (const BenchQuery& q : report.queries) {
      if (q.entities != n) continue;
      ++g.total;
      if (!q.correct) continue;
      ++g.correct;
      sum += q.total_ms;
    }
    if (g.correct) g.mean_ms = sum / g.correct;
    report.groups.push_back(g);
  }
  return report;
}

}  // namespace bibnli
