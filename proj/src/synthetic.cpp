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


#include "bibnli/synthetic.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bibnli/query_suite.hpp"
#include "bibnli/cnl_parser.hpp"
#include "bibnli/lexicon.hpp"

namespace bibnli {

namespace {

constexpr std::array<std::string_view, 14> kOnsets = {
    "b", "d", "f", "g", "k", "l", "m", "n", "p", "r", "s", "t", "v", "z"};
constexpr std::array<std::string_view, 5> kVowels = {"a", "e", "i", "o", "u"};

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {
    for (const SuiteQuery& q : suite_queries()) {
      for (const WordSpan& w : split_words(q.text)) {
        vocabulary_.insert(fold_ascii(q.text.substr(w.start, w.end - w.start)));
      }
    }
    for (const auto& [type, surfaces] : default_class_surfaces()) {
      for (const std::string& s : surfaces) vocabulary_.insert(fold_ascii(s));
    }
    for (std::string_view w : grammar_words()) vocabulary_.emplace(w);
  }

  Dataset run(const SyntheticSizes& extras) {
    wire_suite();
    required_ = counts();
    add_extras(extras);
    attach_paper_properties();
    return std::move(data_);
  }

  SyntheticSizes required() {
    wire_suite();
    return counts();
  }

 private:
  // Portable across standard libraries, unlike std distributions.
  std::size_t uniform(std::size_t n) { return n ? rng_() % n : 0; }

  std::string syllable_word() {
    while (true) {
      std::string w;
      std::size_t syllables = 2 + uniform(3);
      for (std::size_t i = 0; i < syllables; ++i) {
        w += kOnsets[uniform(kOnsets.size())];
        w += kVowels[uniform(kVowels.size())];
      }
      bool near = std::any_of(
          vocabulary_.begin(), vocabulary_.end(),
          [&](const std::string& v) { return edit_distance(w, v) <= 1; });
      if (!near) return w;
    }
  }

  static std::string capitalize(std::string w) {
    w[0] = static_cast<char>(w[0] - 'a' + 'A');
    return w;
  }

  std::string random_name(EntityType type) {
    while (true) {
      std::string name;
      auto words = [&](std::size_t n, bool caps) {
        for (std::size_t i = 0; i < n; ++i) {
          if (i) name += ' ';
          name += caps ? capitalize(syllable_word()) : syllable_word();
        }
      };
      switch (type) {
        case EntityType::kPaper: words(3 + uniform(4), false); break;
        case EntityType::kAuthor: words(2, true); break;
        case EntityType::kTerm: words(1, false); break;
        case EntityType::kSource: words(2 + uniform(2), true); break;
        case EntityType::kOrganization: words(2, true); break;
      }
      if (type == EntityType::kPaper) name = capitalize(name);
      if (names_.insert(fold_ascii(name)).second) return name;
    }
  }

  std::size_t add_node(EntityType type, std::string name) {
    static constexpr std::array<char, kNumEntityTypes> kPrefix = {'P', 'A', 'T',
                                                                  'S', 'O'};
    std::size_t& n = next_id_[index_of(type)];
    char id[16];
    std::snprintf(id, sizeof id, "%c%05zu", kPrefix[index_of(type)], ++n);
    data_.nodes.push_back({id, type, std::move(name), {}});
    return data_.nodes.size() - 1;
  }

  // The required entity with this name, created on first use.
  std::size_t named(EntityType type, std::string_view name) {
    for (std::size_t i = 0; i < data_.nodes.size(); ++i) {
      if (data_.nodes[i].type == type && data_.nodes[i].name == name) return i;
    }
    names_.insert(fold_ascii(name));
    return add_node(type, std::string(name));
  }

  std::size_t fresh(EntityType type) {
    return add_node(type, random_name(type));
  }

  void link(std::size_t s, std::string_view label, std::size_t t) {
    EdgeRecord e{data_.nodes[s].id, data_.nodes[t].id, std::string(label)};
    if (edge_set_.insert(e.source_id + '\t' + e.target_id + '\t' + e.label)
            .second) {
      data_.edges.push_back(std::move(e));
    }
  }

  std::size_t paper() { return fresh(EntityType::kPaper); }
  std::size_t author() { return fresh(EntityType::kAuthor); }
  std::size_t P(std::string_view n) { return named(EntityType::kPaper, n); }
  std::size_t A(std::string_view n) { return named(EntityType::kAuthor, n); }
  std::size_t T(std::string_view n) { return named(EntityType::kTerm, n); }
  std::size_t S(std::string_view n) { return named(EntityType::kSource, n); }
  std::size_t O(std::string_view n) {
    return named(EntityType::kOrganization, n);
  }

  void writes(std::size_t a, std::size_t p) { link(a, "WRITES", p); }
  void cites(std::size_t p, std::size_t q) { link(p, "CITES", q); }
  void publishes(std::size_t s, std::size_t p) { link(s, "PUBLISHES", p); }
  void has_term(std::size_t p, std::size_t t) { link(p, "HAS_TERM", t); }
  void affiliated(std::size_t a, std::size_t o) {
    link(a, "AFFILIATED_WITH", o);
  }

  void wire_suite() {
    // Every required entity exists even when a query's wiring below does
    // not touch it.
    for (const DatasetRecord& r : suite_entities()) named(r.type, r.name);

    std::size_t p;
    std::size_t q;
    std::size_t a;

    writes(A("Gerard Salton"), paper());                                // 1
    writes(A("Michael Lawrence"), paper());                             // 2
    writes(A("Sangjun Lee"), paper());                                  // 3
    has_term(paper(), T("ontology"));                                   // 4
    writes(author(), P("Automatic text structuring experiments"));      // 5
    cites(P("Energy-Aware and Time-Critical Geo-Routing in Wireless Sensor "
            "Networks"),
          paper());                                                     // 6
    has_term(P("Opacity generalised to transition systems"),
             T("simulation"));                                          // 7
    affiliated(A("Johann Eder"), O("University713"));                   // 8
    publishes(S("Theoretical Computer Science"),
              P("The Effect of Faults on Network Expansions"));         // 9
    publishes(S("Theoretical Computer Science"), paper());              // 10

    p = paper();                                                        // 11
    has_term(p, T("classification"));
    has_term(p, T("DNA"));
    p = paper();                                                        // 12
    writes(A("John R. Mick"), p);
    publishes(S("ACM SIGMICRO Newsletter"), p);
    p = paper();                                                        // 13
    q = paper();
    cites(p, q);
    writes(A("Braham Barkat"), q);
    p = paper();                                                        // 14
    has_term(p, T("modulation"));
    publishes(S("Neural Networks"), p);
    a = author();                                                       // 15
    affiliated(a, O("University713"));
    writes(a, P("A control word model for detecting conflicts between "
                "microoperations"));
    p = paper();                                                        // 16
    publishes(S("Applied Intelligence"), p);
    writes(A("Zesheng Chen"), p);
    p = paper();                                                        // 17
    writes(author(), p);
    publishes(S("AI Communications"), p);
    p = paper();                                                        // 18
    writes(author(), p);
    has_term(p, T("simulation"));
    p = paper();                                                        // 19
    writes(A("Junghyun Nam"), p);
    has_term(p, T("genome"));
    a = author();                                                       // 20
    affiliated(a, O("University123"));
    writes(a, P("A New Quadtree Decomposition Reconstruction Methods"));

    p = paper();                                                        // 21
    has_term(p, T("survey"));
    has_term(p, T("semantic"));
    has_term(p, T("retrieval"));
    p = paper();                                                        // 22
    q = paper();
    writes(author(), p);
    cites(q, p);
    publishes(S("Decision Support Systems"), q);
    p = paper();                                                        // 23
    q = paper();
    cites(p, q);
    writes(A("Rainer Engelke"), q);
    publishes(S("Microsystem Technologies"), q);
    p = paper();                                                        // 24
    q = paper();
    writes(A("Nina Yevtushenko"), p);
    cites(q, p);
    writes(A("Sergey Buffalov"), q);
    p = paper();                                                        // 25
    publishes(S("Neural Networks"), p);
    has_term(p, T("genome"));
    has_term(p, T("mining"));
    p = paper();                                                        // 26
    writes(A("Rafae Bhatti"), p);
    publishes(S("Communications of the ACM"), p);
    has_term(p, T("ontology"));
    p = paper();                                                        // 27
    publishes(S("Journal of Multivariate Analysis"), p);
    writes(A("Tomasz Jurdzinski"), p);
    has_term(p, T("automata"));
    a = author();                                                       // 28
    p = paper();
    affiliated(a, O("University123"));
    writes(a, p);
    has_term(p, T("clustering"));
    a = author();                                                       // 29
    p = paper();
    affiliated(a, O("University40"));
    writes(a, p);
    publishes(S("Journal of Multivariate Analysis"), p);
    a = author();                                                       // 30
    p = paper();
    affiliated(a, O("University007"));
    writes(a, p);
    has_term(p, T("clustering"));

    wire_query_31();

    a = author();                                                       // 32
    p = paper();
    q = paper();
    writes(a, p);
    cites(q, p);
    writes(A("Changqiu Jin"), q);
    publishes(S("Journal of Computational Physics"), q);
    p = paper();                                                        // 33
    q = paper();
    has_term(p, T("simulation"));
    cites(q, p);
    has_term(q, T("kernel"));
    has_term(q, T("regression"));
    p = paper();                                                        // 34
    q = paper();
    publishes(S("Theoretical Computer Science"), p);
    cites(q, p);
    has_term(q, T("middleware"));
    has_term(q, T("embedded"));
    a = author();                                                       // 35
    p = paper();
    q = paper();
    affiliated(a, O("University899"));
    writes(a, p);
    cites(q, p);
    publishes(S("Journal of Robotic Systems"), q);
    a = author();                                                       // 36
    p = paper();
    affiliated(a, O("University170"));
    writes(a, p);
    has_term(p, T("similarity"));
    has_term(p, T("bayesian"));
    a = author();                                                       // 37
    p = paper();
    has_term(p, T("bayesian"));
    has_term(p, T("electron"));
    writes(a, p);
    affiliated(a, O("University170"));
    a = author();                                                       // 38
    p = paper();
    publishes(S("Cybernetics and Systems Analysis"), p);
    has_term(p, T("eigenvalue"));
    writes(a, p);
    affiliated(a, O("University40"));
    a = author();                                                       // 39
    p = paper();
    affiliated(a, O("University899"));
    writes(a, p);
    has_term(p, T("classifier"));
    publishes(S("Applied Intelligence"), p);
    a = author();                                                       // 40
    p = paper();
    has_term(p, T("eigenvalue"));
    publishes(S("Cybernetics and Systems Analysis"), p);
    writes(a, p);
    affiliated(a, O("University362"));
  }

  // Exactly three papers about classification are cited by Asoke K. Nandi's
  // Pattern Recognition papers. Each distractor breaks one condition.
  void wire_query_31() {
    std::size_t nandi = A("Asoke K. Nandi");
    std::size_t pr = S("Pattern Recognition");
    std::size_t classification = T("classification");

    std::size_t c1 = paper();
    std::size_t c2 = paper();
    for (std::size_t c : {c1, c2}) {
      writes(nandi, c);
      publishes(pr, c);
    }
    for (std::size_t i = 0; i < 3; ++i) {
      std::size_t q = paper();
      has_term(q, classification);
      cites(i < 2 ? c1 : c2, q);
    }

    std::size_t elsewhere = paper();  // right author, wrong source
    writes(nandi, elsewhere);
    publishes(S("Journal of Computational Physics"), elsewhere);
    std::size_t other = paper();  // right source, wrong author
    writes(author(), other);
    publishes(pr, other);
    for (std::size_t citer : {elsewhere, other}) {
      std::size_t q = paper();
      has_term(q, classification);
      cites(citer, q);
    }
    std::size_t off_topic = paper();  // cited, but not about classification
    has_term(off_topic, T("kernel"));
    cites(c1, off_topic);
  }

  SyntheticSizes counts() const {
    std::array<std::size_t, kNumEntityTypes> n{};
    for (const NodeRecord& r : data_.nodes) ++n[index_of(r.type)];
    return {n[index_of(EntityType::kPaper)], n[index_of(EntityType::kAuthor)],
            n[index_of(EntityType::kTerm)], n[index_of(EntityType::kSource)],
            n[index_of(EntityType::kOrganization)]};
  }

  // Random papers take authors and citations from the random pool only.
  void add_extras(const SyntheticSizes& extras) {
    auto make = [&](EntityType type, std::size_t n) {
      std::vector<std::size_t> out;
      for (std::size_t i = 0; i < n; ++i) out.push_back(fresh(type));
      return out;
    };
    auto papers = make(EntityType::kPaper, extras.papers);
    auto authors = make(EntityType::kAuthor, extras.authors);
    make(EntityType::kTerm, extras.terms);
    make(EntityType::kSource, extras.sources);
    make(EntityType::kOrganization, extras.organizations);

    std::array<std::vector<std::size_t>, kNumEntityTypes> all;
    for (std::size_t i = 0; i < data_.nodes.size(); ++i) {
      all[index_of(data_.nodes[i].type)].push_back(i);
    }
    auto pick = [&](EntityType t) {
      const auto& pool = all[index_of(t)];
      return pool[uniform(pool.size())];
    };

    for (std::size_t p : papers) {
      if (!authors.empty()) {
        for (std::size_t k = 1 + uniform(3); k > 0; --k) {
          writes(authors[uniform(authors.size())], p);
        }
      }
      for (std::size_t k = 1 + uniform(3); k > 0; --k) {
        has_term(p, pick(EntityType::kTerm));
      }
      publishes(pick(EntityType::kSource), p);
      for (std::size_t k = uniform(5); k > 0; --k) {
        std::size_t q = papers[uniform(papers.size())];
        if (q != p) cites(p, q);
      }
    }
    for (std::size_t a : authors) affiliated(a, pick(EntityType::kOrganization));
  }

  void attach_paper_properties() {
    std::vector<std::string> source_of(data_.nodes.size());
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < data_.nodes.size(); ++i) {
      index[data_.nodes[i].id] = i;
    }
    for (const EdgeRecord& e : data_.edges) {
      if (e.label == "PUBLISHES") source_of[index[e.target_id]] = e.source_id;
    }
    for (std::size_t i = 0; i < data_.nodes.size(); ++i) {
      NodeRecord& n = data_.nodes[i];
      if (n.type != EntityType::kPaper) continue;
      n.properties["year"] = std::to_string(1990 + uniform(26));
      if (!source_of[i].empty()) n.properties["source_id"] = source_of[i];
    }
  }

  std::mt19937_64 rng_;
  std::set<std::string> vocabulary_;
  std::set<std::string> names_;
  std::set<std::string> edge_set_;
  std::array<std::size_t, kNumEntityTypes> next_id_{};
  Dataset data_;
  SyntheticSizes required_;
};

constexpr SyntheticSizes kDeskTotals = {630, 596, 291, 13, 10};

std::size_t minus(std::size_t total, std::size_t have) {
  return total > have ? total - have : 0;
}

}  // namespace

SyntheticSizes required_sizes() { return Generator(0).required(); }

SyntheticSizes SyntheticSizes::desk_scale() {
  SyntheticSizes r = required_sizes();
  return {minus(kDeskTotals.papers, r.papers),
          minus(kDeskTotals.authors, r.authors),
          minus(kDeskTotals.terms, r.terms),
          minus(kDeskTotals.sources, r.sources),
          minus(kDeskTotals.organizations, r.organizations)};
}

Dataset generate_synthetic(std::uint64_t seed, const SyntheticSizes& extras) {
  return Generator(seed).run(extras);
}

}  // namespace bibnli
