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


#include <exception>

#include "bibnli/error.hpp"
#include "bibnli/service.hpp"
#include "httplib.h"

namespace bibnli {

using nlohmann::json;

namespace {

void reply(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_header("Access-Control-Allow-Origin", "*");
  res.set_content(body.dump(), "application/json");
}

json request_error(const std::string& message) {
  return {{"error",
           {{"kind", "InvalidRequest"},
            {"stage", to_string(Stage::kValidation)},
            {"message", message},
            {"token", nullptr}}}};
}

// {"query": text, "limit": n?}; nullopt after replying with 400.
std::optional<std::pair<std::string, std::size_t>> read_request(
    const httplib::Request& req, httplib::Response& res) {
  json body;
  try {
    body = json::parse(req.body);
  } catch (const json::exception&) {
    reply(res, 400, request_error("request body must be JSON"));
    return std::nullopt;
  }
  if (!body.is_object() || !body.contains("query") ||
      !body["query"].is_string()) {
    reply(res, 400, request_error("request needs a string field \"query\""));
    return std::nullopt;
  }
  std::size_t limit = 0;
  if (body.contains("limit")) {
    if (!body["limit"].is_number_unsigned()) {
      reply(res, 400, request_error("\"limit\" must be a non-negative integer"));
      return std::nullopt;
    }
    limit = body["limit"].get<std::size_t>();
  }
  return std::pair{body["query"].get<std::string>(), limit};
}

}  // namespace

struct HttpServer::Impl {
  const Engine& engine;
  httplib::Server server;

  explicit Impl(const Engine& e) : engine(e) {
    server.Post("/analyze", [this](const httplib::Request& req,
                                   httplib::Response& res) {
      auto r = read_request(req, res);
      if (!r) return;
      json doc = engine.analyze(r->first);
      reply(res, doc["error"].is_null() ? 200 : 400, doc);
    });
    server.Post("/search", [this](const httplib::Request& req,
                                  httplib::Response& res) {
      auto r = read_request(req, res);
      if (!r) return;
      if (!engine.graph()) {
        reply(res, 503, {{"error",
                          {{"kind", "NoDataset"},
                           {"stage", to_string(Stage::kExecution)},
                           {"message", "no dataset loaded"},
                           {"token", nullptr}}}});
        return;
      }
      json doc = engine.search(r->first, r->second);
      reply(res, doc["analysis"]["error"].is_null() ? 200 : 400, doc);
    });
    server.Get("/schema", [this](const httplib::Request&,
                                 httplib::Response& res) {
      reply(res, 200, engine.schema().to_json());
    });
    server.Get("/health", [this](const httplib::Request&,
                                 httplib::Response& res) {
      json graph;
      if (const PropertyGraph* g = engine.graph()) {
        graph = {{"entities", g->entities().size()},
                 {"edges", g->edges().size()}};
      }
      reply(res, 200,
            {{"status", "ok"},
             {"graph", graph},
             {"dictionary_entries", engine.dictionary().size()}});
    });
    server.Options(R"(/.*)", [](const httplib::Request&,
                                httplib::Response& res) {
      res.set_header("Access-Control-Allow-Origin", "*");
      res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
      res.set_header("Access-Control-Allow-Headers", "Content-Type");
      res.status = 204;
    });
    server.set_exception_handler([](const httplib::Request&,
                                    httplib::Response& res,
                                    std::exception_ptr ep) {
      std::string message = "internal error";
      try {
        std::rethrow_exception(ep);
      } catch (const std::exception& e) {
        message = e.what();
      } catch (...) {
      }
      reply(res, 500, {{"error",
                        {{"kind", "ServerError"},
                         {"stage", nullptr},
                         {"message", message},
                         {"token", nullptr}}}});
    });
  }
};

HttpServer::HttpServer(const Engine& engine)
    : impl_(std::make_unique<Impl>(engine)) {}

HttpServer::~HttpServer() = default;

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpServer::serve() { return impl_->server.listen_after_bind(); }

void HttpServer::stop() { impl_->server.stop(); }

}  // namespace bibnli
