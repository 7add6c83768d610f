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


#include "bibnli/graph_store.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace bibnli {

namespace fs = std::filesystem;

IngestError::IngestError(std::vector<IngestIssue> issues)
    : DataError([&] {
        std::string msg = std::to_string(issues.size()) + " ingest error(s)";
        for (const IngestIssue& i : issues) {
          msg += "\n  " + i.file;
          if (i.line) msg += ":" + std::to_string(i.line);
          msg += ": " + i.message;
        }
        return msg;
      }()),
      issues_(std::move(issues)) {}

std::string_view node_file_stem(EntityType type) {
  switch (type) {
    case EntityType::kPaper: return "papers";
    case EntityType::kAuthor: return "authors";
    case EntityType::kTerm: return "terms";
    case EntityType::kSource: return "sources";
    case EntityType::kOrganization: return "organizations";
  }
  return "";
}

namespace {

std::vector<std::string> split_tabs(std::string_view line) {
  std::vector<std::string> out;
  std::size_t from = 0;
  while (true) {
    std::size_t at = line.find('\t', from);
    out.emplace_back(line.substr(from, at - from));
    if (at == std::string_view::npos) break;
    from = at + 1;
  }
  return out;
}

// Lines of a file with trailing CR removed, numbered from 1; blank lines
// are skipped.
template <typename Fn>
void for_each_line(const fs::path& path, Fn&& fn) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    fn(number, line);
  }
}

class DatasetReader {
 public:
  explicit DatasetReader(const fs::path& dir) : dir_(dir) {}

  Dataset run() {
    if (!fs::is_directory(dir_)) {
      throw DataError("dataset directory " + dir_.string() + " not found");
    }
    for (EntityType t : kAllEntityTypes) {
      std::string stem(node_file_stem(t));
      read_nodes(dir_ / (stem + ".tsv"), t);
      read_nodes(dir_ / (stem + ".jsonl"), t);
    }
    read_nodes(dir_ / "nodes.tsv", std::nullopt);
    read_nodes(dir_ / "nodes.jsonl", std::nullopt);
    read_edges(dir_ / "edges.tsv");
    read_edges(dir_ / "edges.jsonl");
    if (!issues_.empty()) throw IngestError(std::move(issues_));
    return std::move(data_);
  }

 private:
  void issue(const fs::path& file, std::size_t line, std::string message) {
    issues_.push_back({file.filename().string(), line, std::move(message)});
  }

  // Fills `rec` from named fields; `fixed` is the type implied by the file.
  void add_node(const fs::path& file, std::size_t line,
                std::map<std::string, std::string> fields,
                std::optional<EntityType> fixed) {
    NodeRecord rec;
    auto take = [&](const std::string& key) -> std::optional<std::string> {
      auto it = fields.find(key);
      if (it == fields.end()) return std::nullopt;
      std::string v = std::move(it->second);
      fields.erase(it);
      return v;
    };
    auto id = take("id");
    auto name = take("name");
    auto type = take("type");
    if (!id || id->empty()) return issue(file, line, "missing id");
    if (!name || name->empty()) {
      return issue(file, line, "record '" + *id + "' has an empty name");
    }
    if (type) {
      auto parsed = parse_entity_type(*type);
      if (!parsed) {
        return issue(file, line, "record '" + *id + "' has unknown entity type '" +
                                     *type + "'");
      }
      if (fixed && *parsed != *fixed) {
        return issue(file, line, "record '" + *id + "' has type " + *type +
                                     " in a " + std::string(to_string(*fixed)) +
                                     " file");
      }
      rec.type = *parsed;
    } else if (fixed) {
      rec.type = *fixed;
    } else {
      return issue(file, line, "record '" + *id + "' has no type");
    }
    rec.id = std::move(*id);
    rec.name = std::move(*name);
    rec.properties = std::move(fields);
    data_.nodes.push_back(std::move(rec));
  }

  void read_nodes(const fs::path& path, std::optional<EntityType> fixed) {
    if (!fs::exists(path)) return;
    if (path.extension() == ".jsonl") {
      for_each_line(path, [&](std::size_t n, const std::string& line) {
        auto fields = json_fields(path, n, line);
        if (fields) add_node(path, n, std::move(*fields), fixed);
      });
      return;
    }
    std::vector<std::string> header;
    for_each_line(path, [&](std::size_t n, const std::string& line) {
      if (header.empty()) {
        header = split_tabs(line);
        return;
      }
      auto cols = split_tabs(line);
      if (cols.size() != header.size()) {
        return issue(path, n, "expected " + std::to_string(header.size()) +
                                  " columns, found " +
                                  std::to_string(cols.size()));
      }
      std::map<std::string, std::string> fields;
      for (std::size_t i = 0; i < cols.size(); ++i) {
        if (!cols[i].empty() || header[i] == "name" || header[i] == "id") {
          fields[header[i]] = cols[i];
        }
      }
      add_node(path, n, std::move(fields), fixed);
    });
  }

  std::optional<std::map<std::string, std::string>> json_fields(
      const fs::path& path, std::size_t n, const std::string& line) {
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      issue(path, n, std::string("malformed JSON: ") + e.what());
      return std::nullopt;
    }
    if (!obj.is_object()) {
      issue(path, n, "expected a JSON object");
      return std::nullopt;
    }
    std::map<std::string, std::string> fields;
    for (auto& [key, value] : obj.items()) {
      if (value.is_string()) {
        fields[key] = value.get<std::string>();
      } else if (value.is_number() || value.is_boolean()) {
        fields[key] = value.dump();
      } else if (!value.is_null()) {
        issue(path, n, "field '" + key + "' must be a scalar");
        return std::nullopt;
      }
    }
    return fields;
  }

  void add_edge(const fs::path& file, std::size_t line,
                std::map<std::string, std::string> fields) {
    EdgeRecord e;
    for (auto [key, slot] :
         {std::pair{"source_id", &e.source_id}, {"target_id", &e.target_id},
          {"label", &e.label}}) {
      auto it = fields.find(key);
      if (it == fields.end() || it->second.empty()) {
        return issue(file, line, std::string("missing ") + key);
      }
      *slot = it->second;
    }
    data_.edges.push_back(std::move(e));
  }

  void read_edges(const fs::path& path) {
    if (!fs::exists(path)) return;
    if (path.extension() == ".jsonl") {
      for_each_line(path, [&](std::size_t n, const std::string& line) {
        auto fields = json_fields(path, n, line);
        if (fields) add_edge(path, n, std::move(*fields));
      });
      return;
    }
    std::vector<std::string> header;
    for_each_line(path, [&](std::size_t n, const std::string& line) {
      if (header.empty()) {
        header = split_tabs(line);
        return;
      }
      auto cols = split_tabs(line);
      if (cols.size() != header.size()) {
        return issue(path, n, "expected " + std::to_string(header.size()) +
                                  " columns, found " +
                                  std::to_string(cols.size()));
      }
      std::map<std::string, std::string> fields;
      for (std::size_t i = 0; i < cols.size(); ++i) fields[header[i]] = cols[i];
      add_edge(path, n, std::move(fields));
    });
  }

  fs::path dir_;
  Dataset data_;
  std::vector<IngestIssue> issues_;
};

void check_field(std::string_view value) {
  if (value.find_first_of("\t\r\n") != std::string_view::npos) {
    throw DataError("field contains a tab or line break: '" +
                    std::string(value) + "'");
  }
}

constexpr std::uint64_t kFnvOffset = 1469598103934665603ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

void fnv(std::uint64_t& h, std::string_view s) {
  for (unsigned char c : s) {
    h ^= c;
    h *= kFnvPrime;
  }
  h ^= 0xff;  // field separator
  h *= kFnvPrime;
}

}  // namespace

Dataset read_dataset(const fs::path& dir) { return DatasetReader(dir).run(); }

void write_dataset(const Dataset& data, const fs::path& dir) {
  fs::create_directories(dir);
  for (EntityType t : kAllEntityTypes) {
    std::set<std::string> extra;
    for (const NodeRecord& n : data.nodes) {
      if (n.type != t) continue;
      for (const auto& [k, v] : n.properties) extra.insert(k);
    }
    std::ofstream out(dir / (std::string(node_file_stem(t)) + ".tsv"),
                      std::ios::binary);
    out << "id\tname";
    for (const auto& k : extra) out << '\t' << k;
    out << '\n';
    for (const NodeRecord& n : data.nodes) {
      if (n.type != t) continue;
      check_field(n.id);
      check_field(n.name);
      out << n.id << '\t' << n.name;
      for (const auto& k : extra) {
        auto it = n.properties.find(k);
        std::string v = it == n.properties.end() ? "" : it->second;
        check_field(v);
        out << '\t' << v;
      }
      out << '\n';
    }
    if (!out) throw DataError("cannot write " + (dir / node_file_stem(t)).string());
  }
  std::ofstream out(dir / "edges.tsv", std::ios::binary);
  out << "source_id\ttarget_id\tlabel\n";
  for (const EdgeRecord& e : data.edges) {
    check_field(e.source_id);
    check_field(e.target_id);
    check_field(e.label);
    out << e.source_id << '\t' << e.target_id << '\t' << e.label << '\n';
  }
  if (!out) throw DataError("cannot write " + (dir / "edges.tsv").string());
}

PropertyGraph PropertyGraph::build(const Dataset& data, const Schema& schema) {
  PropertyGraph g;
  std::vector<IngestIssue> issues;
  for (const EdgeType& e : schema.edges()) g.labels_.push_back(e.label);
  g.by_type_.resize(kNumEntityTypes);

  for (std::size_t i = 0; i < data.nodes.size(); ++i) {
    const NodeRecord& n = data.nodes[i];
    if (n.id.empty() || n.name.empty()) {
      issues.push_back({"nodes", i + 1, "record '" + n.id +
                                            "' needs a non-empty id and name"});
      continue;
    }
    auto [it, fresh] = g.ids_.emplace(n.id, g.entities_.size());
    if (!fresh) {
      issues.push_back({"nodes", i + 1, "duplicate id '" + n.id + "'"});
      continue;
    }
    std::size_t idx = g.entities_.size();
    g.entities_.push_back({n.id, n.type, n.name, n.properties});
    g.by_type_[index_of(n.type)].push_back(idx);
    g.by_name_[{n.type, n.name}].push_back(idx);
  }
  g.out_.resize(g.entities_.size());
  g.in_.resize(g.entities_.size());

  for (std::size_t i = 0; i < data.edges.size(); ++i) {
    const EdgeRecord& e = data.edges[i];
    std::string where = e.source_id + " -" + e.label + "-> " + e.target_id;
    auto s = g.find_id(e.source_id);
    auto t = g.find_id(e.target_id);
    auto l = g.label_index(e.label);
    if (!s || !t) {
      issues.push_back({"edges", i + 1, "dangling endpoint '" +
                                            (!s ? e.source_id : e.target_id) +
                                            "' in " + where});
      continue;
    }
    if (!l) {
      issues.push_back({"edges", i + 1, "unknown label in " + where});
      continue;
    }
    const EdgeType& et = schema.edges()[*l];
    if (g.entities_[*s].type != et.source || g.entities_[*t].type != et.target) {
      issues.push_back({"edges", i + 1,
                        "endpoint types " +
                            std::string(to_string(g.entities_[*s].type)) + "/" +
                            std::string(to_string(g.entities_[*t].type)) +
                            " do not match " + e.label + " in " + where});
      continue;
    }
    std::uint64_t key = g.edge_key(*s, *t, *l);
    if (g.edge_index_.count(key)) {
      issues.push_back({"edges", i + 1, "duplicate edge " + where});
      continue;
    }
    std::size_t idx = g.edges_.size();
    g.edge_index_[key] = idx;
    g.edges_.push_back({*s, *t, *l});
    g.out_[*s].push_back(idx);
    g.in_[*t].push_back(idx);
  }
  if (!issues.empty()) throw IngestError(std::move(issues));
  return g;
}

std::uint64_t PropertyGraph::edge_key(std::size_t s, std::size_t t,
                                      std::size_t l) const {
  std::uint64_t n = entities_.size();
  return (static_cast<std::uint64_t>(s) * n + t) * labels_.size() + l;
}

std::optional<std::size_t> PropertyGraph::find_id(std::string_view id) const {
  auto it = ids_.find(std::string(id));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> PropertyGraph::label_index(
    std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

std::span<const std::size_t> PropertyGraph::of_type(EntityType type) const {
  if (by_type_.empty()) return {};
  return by_type_[index_of(type)];
}

std::span<const std::size_t> PropertyGraph::named(EntityType type,
                                                  std::string_view name) const {
  auto it = by_name_.find(std::pair{type, std::string(name)});
  if (it == by_name_.end()) return {};
  return it->second;
}

std::optional<std::size_t> PropertyGraph::find_edge(std::size_t source,
                                                    std::size_t target,
                                                    std::size_t label) const {
  auto it = edge_index_.find(edge_key(source, target, label));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<DatasetRecord> PropertyGraph::dictionary_records() const {
  std::vector<DatasetRecord> out;
  out.reserve(entities_.size());
  for (const Entity& e : entities_) out.push_back({e.type, e.name});
  return out;
}

std::uint64_t PropertyGraph::fingerprint() const {
  std::uint64_t h = kFnvOffset;
  for (const Entity& e : entities_) {
    fnv(h, e.id);
    fnv(h, to_string(e.type));
    fnv(h, e.name);
    for (const auto& [k, v] : e.properties) {
      fnv(h, k);
      fnv(h, v);
    }
  }
  for (const Edge& e : edges_) {
    fnv(h, std::to_string(e.source));
    fnv(h, std::to_string(e.target));
    fnv(h, labels_[e.label]);
  }
  return h;
}

PropertyGraph ingest(const fs::path& dir, const Schema& schema) {
  return PropertyGraph::build(read_dataset(dir), schema);
}

namespace {

class Matcher {
 public:
  Matcher(const GraphQuery& q, const PropertyGraph& g) : q_(q), g_(g) {}

  std::vector<std::size_t> run() {
    const std::size_t n = q_.nodes.size();
    if (n == 0) return {};
    answer_ = q_.answer();

    base_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const GraphNode& node = q_.nodes[i];
      base_[i] = node.constraint ? g_.named(node.type, *node.constraint)
                                 : g_.of_type(node.type);
      if (base_[i].empty()) return {};
    }
    for (const GraphRelation& r : q_.relations) {
      auto l = g_.label_index(r.label);
      if (!l) return {};
      labels_.push_back(*l);
    }
    plan();
    bind_.assign(n, 0);
    found_.assign(g_.entities().size(), false);
    search(0);

    std::vector<std::size_t> out;
    for (std::size_t e = 0; e < found_.size(); ++e) {
      if (found_[e]) out.push_back(e);
    }
    return out;
  }

 private:
  struct Step {
    std::size_t node;
    std::optional<std::size_t> anchor;  // relation to an earlier node
    std::vector<std::size_t> checks;    // relations closed by this node
  };

  // Most selective node first, then grow along relations.
  void plan() {
    const std::size_t n = q_.nodes.size();
    std::vector<bool> placed(n, false);
    std::vector<std::size_t> position(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
      std::optional<std::size_t> best;
      bool best_linked = false;
      for (std::size_t v = 0; v < n; ++v) {
        if (placed[v]) continue;
        bool linked = false;
        for (const GraphRelation& r : q_.relations) {
          if ((r.source == v && placed[r.target]) ||
              (r.target == v && placed[r.source])) {
            linked = true;
          }
        }
        if (!best || (linked && !best_linked) ||
            (linked == best_linked && base_[v].size() < base_[*best].size())) {
          best = v;
          best_linked = linked;
        }
      }
      Step step{*best, std::nullopt, {}};
      placed[*best] = true;
      position[*best] = k;
      for (std::size_t r = 0; r < q_.relations.size(); ++r) {
        const GraphRelation& rel = q_.relations[r];
        bool touches = rel.source == *best || rel.target == *best;
        if (!touches || !placed[rel.source] || !placed[rel.target]) continue;
        step.checks.push_back(r);
        if (!step.anchor && rel.source != rel.target) step.anchor = r;
      }
      steps_.push_back(std::move(step));
    }
    answer_step_ = position[answer_];
  }

  bool admissible(std::size_t v, std::size_t entity) const {
    const GraphNode& node = q_.nodes[v];
    const auto& e = g_.entities()[entity];
    return e.type == node.type && (!node.constraint || e.name == *node.constraint);
  }

  bool search(std::size_t k) {
    if (k == steps_.size()) {
      found_[bind_[answer_]] = true;
      return true;
    }
    const Step& step = steps_[k];
    const std::size_t v = step.node;
    bool any = false;

    auto attempt = [&](std::size_t entity) -> bool {
      if (k == answer_step_ && found_[entity]) return false;
      bind_[v] = entity;
      std::size_t pushed = 0;
      bool ok = true;
      for (std::size_t r : step.checks) {
        const GraphRelation& rel = q_.relations[r];
        auto edge = g_.find_edge(bind_[rel.source], bind_[rel.target], labels_[r]);
        if (!edge ||
            std::find(used_.begin(), used_.end(), *edge) != used_.end()) {
          ok = false;
          break;
        }
        used_.push_back(*edge);
        ++pushed;
      }
      bool found = ok && search(k + 1);
      used_.resize(used_.size() - pushed);
      return found;
    };

    if (step.anchor) {
      const GraphRelation& rel = q_.relations[*step.anchor];
      std::size_t label = labels_[*step.anchor];
      bool outgoing = rel.target == v;  // walk from the bound source
      std::size_t from = bind_[outgoing ? rel.source : rel.target];
      auto edges = outgoing ? g_.out_edges(from) : g_.in_edges(from);
      for (std::size_t ei : edges) {
        const auto& e = g_.edges()[ei];
        if (e.label != label) continue;
        std::size_t entity = outgoing ? e.target : e.source;
        if (!admissible(v, entity)) continue;
        if (attempt(entity)) {
          any = true;
          if (k > answer_step_) return true;
        }
      }
    } else {
      for (std::size_t entity : base_[v]) {
        if (attempt(entity)) {
          any = true;
          if (k > answer_step_) return true;
        }
      }
    }
    return any;
  }

  const GraphQuery& q_;
  const PropertyGraph& g_;
  std::size_t answer_ = 0;
  std::size_t answer_step_ = 0;
  std::vector<std::span<const std::size_t>> base_;
  std::vector<std::size_t> labels_;
  std::vector<Step> steps_;
  std::vector<std::size_t> bind_;
  std::vector<std::size_t> used_;
  std::vector<bool> found_;
};

}  // namespace

ResultSet execute(const GraphQuery& query, const PropertyGraph& graph) {
  auto start = std::chrono::steady_clock::now();
  ResultSet rs;
  for (std::size_t e : Matcher(query, graph).run()) {
    const auto& entity = graph.entities()[e];
    rs.rows.push_back({entity.id, entity.name, entity.type});
  }
  rs.match_count = rs.rows.size();
  rs.timings_ms.emplace_back(
      "match", std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start)
                   .count());
  return rs;
}

}  // namespace bibnli
