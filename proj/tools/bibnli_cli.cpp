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


// bibnli: command-line front end for the bibliographic query interface.

#include <csignal>
#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "bibnli/error.hpp"
#include "bibnli/graph_store.hpp"
#include "bibnli/service.hpp"
#include "bibnli/synthetic.hpp"

namespace {

using bibnli::Engine;
using bibnli::EngineConfig;

bibnli::HttpServer* active_server = nullptr;

void on_signal(int) {
  if (active_server) active_server->stop();
}

struct Common {
  std::string data;
  std::string schema;

  EngineConfig config() const {
    EngineConfig c;
    if (!data.empty()) c.data = data;
    if (!schema.empty()) c.schema = schema;
    return c;
  }
};

void add_common(CLI::App* cmd, Common& common, bool data_required) {
  auto* data = cmd->add_option("--data", common.data, "dataset directory")
                   ->envname("BIBNLI_DATA");
  if (data_required) data->required();
  cmd->add_option("--schema", common.schema, "schema JSON file")
      ->envname("BIBNLI_SCHEMA");
}

int print_analysis(const nlohmann::json& analysis, bool as_json) {
  if (as_json) {
    std::cout << analysis.dump(2) << '\n';
  } else {
    std::cout << bibnli::render_analysis(analysis);
  }
  return analysis["error"].is_null() ? 0 : 1;
}

int repl(const Engine& engine, std::size_t limit) {
  std::string line;
  std::cout << "bibnli> " << std::flush;
  while (std::getline(std::cin, line)) {
    if (line == "quit" || line == "exit") break;
    if (!line.empty()) {
      if (engine.graph()) {
        auto doc = engine.search(line, limit);
        std::cout << bibnli::render_analysis(doc["analysis"]);
        if (!doc["results"].is_null()) {
          std::cout << '\n' << bibnli::render_results(doc["results"]);
        }
      } else {
        std::cout << bibnli::render_analysis(engine.analyze(line));
      }
    }
    std::cout << "bibnli> " << std::flush;
  }
  std::cout << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Natural-language bibliographic query interface"};
  app.require_subcommand(1);

  Common ingest_opts;
  auto* ingest = app.add_subcommand("ingest", "validate and load a dataset");
  add_common(ingest, ingest_opts, true);

  Common analyze_opts;
  std::string analyze_query;
  bool analyze_json = false;
  auto* analyze =
      app.add_subcommand("analyze", "show how a query is interpreted");
  add_common(analyze, analyze_opts, false);
  analyze->add_option("query", analyze_query, "natural-language query")
      ->required();
  analyze->add_flag("--json", analyze_json, "print the analysis document");

  Common search_opts;
  std::string search_query;
  bool search_json = false;
  std::size_t search_limit = 0;
  auto* search = app.add_subcommand("search", "interpret and run a query");
  add_common(search, search_opts, true);
  search->add_option("query", search_query, "natural-language query")
      ->required();
  search->add_flag("--json", search_json, "print the search document");
  search->add_option("--limit", search_limit, "rows to show (0 = all)");

  Common serve_opts;
  std::string host = "127.0.0.1";
  int port = 8080;
  auto* serve = app.add_subcommand("serve", "run the HTTP service");
  add_common(serve, serve_opts, false);
  serve->add_option("--host", host, "bind address")->envname("BIBNLI_HOST");
  serve->add_option("--port", port, "bind port")->envname("BIBNLI_PORT");

  Common bench_opts;
  std::size_t runs = 1;
  bool bench_json = false;
  auto* bench = app.add_subcommand(
      "bench", "time the suite queries (synthetic seed 42 without --data)");
  add_common(bench, bench_opts, false);
  bench->add_option("--runs", runs, "repetitions per query")
      ->check(CLI::PositiveNumber);
  bench->add_flag("--json", bench_json, "print the report as JSON");

  Common repl_opts;
  std::size_t repl_limit = 20;
  auto* repl_cmd = app.add_subcommand("repl", "interactive query loop");
  add_common(repl_cmd, repl_opts, false);
  repl_cmd->add_option("--limit", repl_limit, "rows to show (0 = all)");

  std::uint64_t seed = 42;
  std::string out_dir;
  bool minimal = false;
  auto* generate =
      app.add_subcommand("generate", "write a synthetic dataset directory");
  generate->add_option("--seed", seed, "random seed");
  generate->add_option("--out", out_dir, "output directory")->required();
  generate->add_flag("--minimal", minimal,
                     "only the entities the suite queries need");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*ingest) {
      Engine engine = Engine::open(ingest_opts.config());
      const auto* g = engine.graph();
      for (auto t : bibnli::kAllEntityTypes) {
        std::cout << bibnli::to_string(t) << ": " << g->count(t) << '\n';
      }
      std::cout << "Edges: " << g->edges().size() << '\n'
                << "Dictionary entries: " << engine.dictionary().size() << '\n';
      return 0;
    }
    if (*analyze) {
      Engine engine = Engine::open(analyze_opts.config());
      return print_analysis(engine.analyze(analyze_query), analyze_json);
    }
    if (*search) {
      Engine engine = Engine::open(search_opts.config());
      auto doc = engine.search(search_query, search_limit);
      if (search_json) {
        std::cout << doc.dump(2) << '\n';
      } else {
        std::cout << bibnli::render_analysis(doc["analysis"]);
        if (!doc["results"].is_null()) {
          std::cout << '\n' << bibnli::render_results(doc["results"]);
        }
      }
      return doc["analysis"]["error"].is_null() ? 0 : 1;
    }
    if (*serve) {
      Engine engine = Engine::open(serve_opts.config());
      bibnli::HttpServer server(engine);
      int bound = server.bind(host, port);
      if (bound < 0) {
        std::cerr << "cannot bind " << host << ":" << port << '\n';
        return 1;
      }
      active_server = &server;
      std::signal(SIGINT, on_signal);
      std::signal(SIGTERM, on_signal);
      std::cerr << "listening on http://" << host << ":" << bound << '\n';
      return server.serve() ? 0 : 1;
    }
    if (*bench) {
      EngineConfig config = bench_opts.config();
      std::optional<Engine> engine;
      if (config.data) {
        engine.emplace(Engine::open(config));
      } else {
        auto schema = config.schema ? bibnli::Schema::load(*config.schema)
                                    : bibnli::Schema::default_schema();
        auto graph = bibnli::PropertyGraph::build(
            bibnli::generate_synthetic(42), schema);
        engine.emplace(std::move(schema), std::move(graph));
      }
      auto report = bibnli::run_bench(*engine, runs);
      if (bench_json) {
        std::cout << report.to_json().dump(2) << '\n';
      } else {
        std::cout << report.to_text();
      }
      return 0;
    }
    if (*repl_cmd) {
      Engine engine = Engine::open(repl_opts.config());
      return repl(engine, repl_limit);
    }
    if (*generate) {
      auto sizes = minimal ? bibnli::SyntheticSizes{}
                           : bibnli::SyntheticSizes::desk_scale();
      bibnli::write_dataset(bibnli::generate_synthetic(seed, sizes), out_dir);
      std::cout << "wrote " << out_dir << '\n';
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
