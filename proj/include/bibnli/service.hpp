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


// The query engine shared by the CLI and the HTTP service: analysis and
// search payloads, the benchmark, and the HTTP front end.

#ifndef BIBNLI_SERVICE_HPP_
#define BIBNLI_SERVICE_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bibnli/emitter.hpp"
#include "bibnli/graph_store.hpp"
#include "bibnli/lexicon.hpp"
#include "bibnli/query_graph.hpp"
#include "bibnli/schema.hpp"
#include "json.hpp"

namespace bibnli {

struct EngineConfig {
  std::optional<std::filesystem::path> data;    // dataset directory
  std::optional<std::filesystem::path> schema;  // schema JSON file
};

// Read-only after construction; safe to share between request threads.
class Engine {
 public:
  // Without a graph the dictionary holds class entries only.
  explicit Engine(Schema schema, std::optional<PropertyGraph> graph = {});

  // Throws DataError when a file cannot be read or ingested.
  static Engine open(const EngineConfig& config);

  const Schema& schema() const { return schema_; }
  const Dictionary& dictionary() const { return dict_; }
  const PropertyGraph* graph() const { return graph_ ? &*graph_ : nullptr; }

  Compilation compile(std::string_view query) const;

  // Full analysis document; "error" is non-null when the pipeline failed.
  nlohmann::json analyze(std::string_view query) const;

  // {"analysis": ..., "results": ..., "total_ms": ...}. Throws DataError
  // without a graph. A limit of 0 returns every row.
  nlohmann::json search(std::string_view query, std::size_t limit = 0) const;

 private:
  Schema schema_;
  std::optional<PropertyGraph> graph_;
  Dictionary dict_;
};

nlohmann::json to_json(const Compilation& c);
nlohmann::json to_json(const ResultSet& rs, std::size_t limit = 0);
nlohmann::json to_json(const PipelineError& e);

// Aligned plain-text rendering of analyze and search payloads.
std::string render_analysis(const nlohmann::json& analysis);
std::string render_results(const nlohmann::json& results);

struct BenchQuery {
  int number = 0;
  std::size_t entities = 0;
  bool correct = false;  // compiled graph matches the gold graph
  double interpret_ms = 0.0;  // means over runs
  double execute_ms = 0.0;
  double total_ms = 0.0;
  double max_total_ms = 0.0;
  std::size_t rows = 0;
  std::string error;
};

struct BenchGroup {
  std::size_t entities = 0;
  std::size_t correct = 0;
  std::size_t total = 0;
  // Mean total time over the correctly interpreted queries only.
  std::optional<double> mean_ms;
};

struct BenchReport {
  std::size_t runs = 0;
  std::vector<BenchQuery> queries;
  std::vector<BenchGroup> groups;  // 2, 3, 4, 5 named entities

  nlohmann::json to_json() const;
  std::string to_text() const;
};

// Runs each suite query `runs` times through compile and execute.
// Requires a graph.
BenchReport run_bench(const Engine& engine, std::size_t runs);

class HttpServer {
 public:
  explicit HttpServer(const Engine& engine);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Binds; port 0 picks a free port. Returns the bound port or -1.
  int bind(const std::string& host, int port);
  // Serves until stop(); call after bind.
  bool serve();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace bibnli

#endif  // BIBNLI_SERVICE_HPP_
