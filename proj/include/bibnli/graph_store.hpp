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


// In-memory bibliographic property graph: dataset files, ingestion, and
// pattern-matching execution of graph queries.

#ifndef BIBNLI_GRAPH_STORE_HPP_
#define BIBNLI_GRAPH_STORE_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bibnli/entity.hpp"
#include "bibnli/error.hpp"
#include "bibnli/lexicon.hpp"
#include "bibnli/query_graph.hpp"
#include "bibnli/schema.hpp"

namespace bibnli {

struct NodeRecord {
  std::string id;
  EntityType type = EntityType::kPaper;
  std::string name;
  std::map<std::string, std::string> properties;  // e.g. year, source_id

  friend bool operator==(const NodeRecord&, const NodeRecord&) = default;
};

struct EdgeRecord {
  std::string source_id;
  std::string target_id;
  std::string label;

  friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

struct Dataset {
  std::vector<NodeRecord> nodes;
  std::vector<EdgeRecord> edges;
};

struct IngestIssue {
  std::string file;
  std::size_t line = 0;  // 1-based; 0 when not tied to a line
  std::string message;
};

class IngestError : public DataError {
 public:
  explicit IngestError(std::vector<IngestIssue> issues);
  const std::vector<IngestIssue>& issues() const { return issues_; }

 private:
  std::vector<IngestIssue> issues_;
};

// File stem per entity type: "papers", "authors", "terms", "sources",
// "organizations".
std::string_view node_file_stem(EntityType type);

// Reads <stem>.tsv or <stem>.jsonl per type, an optional nodes.tsv/jsonl
// with an explicit type column, and edges.tsv/jsonl. Missing files count as
// empty. Throws IngestError listing every malformed record.
Dataset read_dataset(const std::filesystem::path& dir);

// Writes the TSV form. Records are written in dataset order.
void write_dataset(const Dataset& data, const std::filesystem::path& dir);

class PropertyGraph {
 public:
  struct Entity {
    std::string id;
    EntityType type;
    std::string name;
    std::map<std::string, std::string> properties;
  };
  struct Edge {
    std::size_t source;  // entity indices
    std::size_t target;
    std::size_t label;   // index into labels()
  };

  PropertyGraph() = default;

  // Validates every record against the schema and throws IngestError
  // naming each offending record: unknown or duplicate ids, dangling
  // endpoints, unknown labels, endpoint types that disagree with the label,
  // repeated (source, target, label) triples.
  static PropertyGraph build(const Dataset& data, const Schema& schema);

  const std::vector<Entity>& entities() const { return entities_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<std::size_t> find_id(std::string_view id) const;
  std::optional<std::size_t> label_index(std::string_view label) const;
  std::span<const std::size_t> of_type(EntityType type) const;
  std::span<const std::size_t> named(EntityType type,
                                     std::string_view name) const;
  std::span<const std::size_t> out_edges(std::size_t entity) const {
    return out_[entity];
  }
  std::span<const std::size_t> in_edges(std::size_t entity) const {
    return in_[entity];
  }
  // Edge index of the triple, if present.
  std::optional<std::size_t> find_edge(std::size_t source, std::size_t target,
                                       std::size_t label) const;

  std::size_t count(EntityType type) const { return of_type(type).size(); }

  // One record per entity, for building the NER dictionary.
  std::vector<DatasetRecord> dictionary_records() const;

  // FNV-1a over entities and edges in index order.
  std::uint64_t fingerprint() const;

 private:
  std::uint64_t edge_key(std::size_t s, std::size_t t, std::size_t l) const;

  std::vector<Entity> entities_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> ids_;
  std::vector<std::vector<std::size_t>> by_type_;
  std::map<std::pair<EntityType, std::string>, std::vector<std::size_t>,
           std::less<>>
      by_name_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
  std::unordered_map<std::uint64_t, std::size_t> edge_index_;
};

PropertyGraph ingest(const std::filesystem::path& dir, const Schema& schema);

struct ResultRow {
  std::string id;
  std::string name;
  EntityType type = EntityType::kPaper;

  friend bool operator==(const ResultRow&, const ResultRow&) = default;
};

struct ResultSet {
  std::vector<ResultRow> rows;  // distinct by id, in entity order
  std::size_t match_count = 0;
  std::vector<std::pair<std::string, double>> timings_ms;
};

// All bindings of the answer node over assignments of every query node to
// an entity of its type, where constrained nodes bind entities with exactly
// that name and each relation binds a distinct graph edge with its label and
// direction. Distinct query nodes may share an entity.
ResultSet execute(const GraphQuery& query, const PropertyGraph& graph);

}  // namespace bibnli

#endif  // BIBNLI_GRAPH_STORE_HPP_
