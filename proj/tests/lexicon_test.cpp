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


#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "bibnli/lexicon.hpp"
#include "doctest.h"

using namespace bibnli;

namespace {

// Plain recursive definition with memoization, over bytes.
std::size_t reference_distance(const std::string& a, const std::string& b) {
  std::vector<std::vector<long>> memo(a.size() + 1,
                                      std::vector<long>(b.size() + 1, -1));
  auto go = [&](auto&& self, std::size_t i, std::size_t j) -> long {
    if (i == a.size()) return static_cast<long>(b.size() - j);
    if (j == b.size()) return static_cast<long>(a.size() - i);
    long& m = memo[i][j];
    if (m >= 0) return m;
    long best = self(self, i + 1, j + 1) + (a[i] == b[j] ? 0 : 1);
    best = std::min(best, self(self, i + 1, j) + 1);
    best = std::min(best, self(self, i, j + 1) + 1);
    return m = best;
  };
  return static_cast<std::size_t>(go(go, 0, 0));
}

std::string random_word(std::mt19937_64& rng, std::size_t min_len,
                        std::size_t max_len, std::string_view alphabet) {
  std::size_t len = min_len + rng() % (max_len - min_len + 1);
  std::string w;
  for (std::size_t i = 0; i < len; ++i) w += alphabet[rng() % alphabet.size()];
  return w;
}

std::size_t class_entry_count() {
  std::size_t n = 0;
  for (const auto& [type, surfaces] : default_class_surfaces()) n += surfaces.size();
  return n;
}

Dictionary retrieval_dictionary() {
  std::vector<DatasetRecord> records = {
      {EntityType::kTerm, "information retrieval"},
      {EntityType::kTerm, "data mining"},
  };
  return build_dictionary(records);
}

}  // namespace

TEST_CASE("dictionary maps instance names to their type") {
  Dictionary dict = retrieval_dictionary();
  auto entries = dict.lookup("information retrieval");
  REQUIRE(entries.size() == 1);
  CHECK(entries[0] == DictEntry::instance(EntityType::kTerm,
                                          "information retrieval"));
  CHECK(entries[0].serialized_value() == "Term");
}

TEST_CASE("class entries carry the class_ marker") {
  Dictionary dict = build_dictionary({});
  CHECK(dict.size() == class_entry_count());
  for (EntityType t : kAllEntityTypes) {
    std::string plural = fold_ascii(std::string(to_string(t))) + "s";
    auto entries = dict.lookup(plural);
    REQUIRE(entries.size() == 1);
    CHECK(entries[0].is_class);
    CHECK(entries[0].serialized_value() == "class_" + std::string(to_string(t)));
  }
}

TEST_CASE("entry count on a ten record fixture") {
  std::vector<DatasetRecord> records = {
      {EntityType::kAuthor, "Ann Lee"},      {EntityType::kAuthor, "Bo Chen"},
      {EntityType::kAuthor, "Cy Young"},     {EntityType::kAuthor, "Di Park"},
      {EntityType::kAuthor, "Ed Stone"},     {EntityType::kTerm, "ontology"},
      {EntityType::kTerm, "clustering"},     {EntityType::kTerm, "ontology"},
      {EntityType::kTerm, "kernel"},         {EntityType::kTerm, "clustering"},
  };
  // 5 authors, 3 distinct terms, 10 class surfaces.
  CHECK(build_dictionary(records).size() == 5 + 3 + 10);
  CHECK(class_entry_count() == 10);
}

TEST_CASE("blank names are rejected and the build continues") {
  std::vector<DatasetRecord> records = {
      {EntityType::kTerm, "  "},
      {EntityType::kTerm, "ontology"},
  };
  Dictionary dict = build_dictionary(records);
  REQUIRE(dict.rejected().size() == 1);
  CHECK(dict.rejected()[0].position == 0);
  CHECK(dict.lookup("ontology").size() == 1);
}

TEST_CASE("edit distance examples") {
  CHECK(edit_distance("Information System", "Information Systems") == 1);
  CHECK(edit_distance("kitten", "sitting") == 3);
  CHECK(edit_distance("", "") == 0);
  CHECK(edit_distance("abc", "abc") == 0);
  CHECK(edit_distance("", "abc") == 3);
  // Code points, not bytes.
  CHECK(edit_distance("caf\xc3\xa9", "cafe") == 1);
}

TEST_CASE("edit distance agrees with the recursive definition") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    std::string a = random_word(rng, 0, 9, "abcd");
    std::string b = random_word(rng, 0, 9, "abcd");
    CHECK(edit_distance(a, b) == reference_distance(a, b));
  }
}

TEST_CASE("edit distance is a metric") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    std::string a = random_word(rng, 0, 8, "abc ");
    std::string b = random_word(rng, 0, 8, "abc ");
    std::string c = random_word(rng, 0, 8, "abc ");
    std::size_t ab = edit_distance(a, b);
    CHECK(ab == edit_distance(b, a));
    CHECK(ab <= std::max(a.size(), b.size()));
    CHECK((ab == 0) == (a == b));
    CHECK(edit_distance(a, c) <= ab + edit_distance(b, c));
  }
}

TEST_CASE("recognize the retrieval query") {
  Dictionary dict = retrieval_dictionary();
  auto mentions =
      recognize("papers about information retrieval and data mining", dict);
  REQUIRE(mentions.size() == 3);
  CHECK(mentions[0].surface == "papers");
  CHECK(mentions[0].entry == DictEntry::class_of(EntityType::kPaper));
  CHECK(mentions[1].surface == "information retrieval");
  CHECK(mentions[1].entry ==
        DictEntry::instance(EntityType::kTerm, "information retrieval"));
  CHECK(mentions[2].surface == "data mining");
  CHECK(mentions[2].distance == 0);
}

TEST_CASE("recognize an empty query") {
  CHECK(recognize("", retrieval_dictionary()).empty());
}

TEST_CASE("approximate match within distance one") {
  std::vector<DatasetRecord> records = {
      {EntityType::kTerm, "Information Systems"}};
  Dictionary dict = build_dictionary(records);
  auto mentions = recognize("papers on Information System", dict);
  REQUIRE(mentions.size() == 2);
  CHECK(mentions[1].surface == "Information System");
  CHECK(mentions[1].entry.canonical == "Information Systems");
  CHECK(mentions[1].distance == 1);
}

TEST_CASE("matching ignores letter case") {
  std::vector<DatasetRecord> records = {{EntityType::kAuthor, "Gerard Salton"}};
  auto mentions = recognize("PAPERS BY gerard salton", build_dictionary(records));
  REQUIRE(mentions.size() == 2);
  CHECK(mentions[1].entry.canonical == "Gerard Salton");
  CHECK(mentions[1].distance == 0);
}

TEST_CASE("short words never match approximately") {
  std::vector<DatasetRecord> records = {{EntityType::kTerm, "in"},
                                        {EntityType::kTerm, "dna"}};
  Dictionary dict = build_dictionary(records);
  CHECK(recognize("on", dict).empty());
  CHECK(recognize("dn", dict).empty());
  CHECK(recognize("in", dict).size() == 1);
}

TEST_CASE("tie-breaks") {
  SUBCASE("longer span wins") {
    std::vector<DatasetRecord> records = {{EntityType::kTerm, "data"},
                                          {EntityType::kTerm, "data mining"}};
    auto m = recognize("data mining", build_dictionary(records));
    REQUIRE(m.size() == 1);
    CHECK(m[0].entry.canonical == "data mining");
  }
  SUBCASE("exact beats approximate at equal length") {
    std::vector<DatasetRecord> records = {{EntityType::kTerm, "mining"},
                                          {EntityType::kTerm, "minint"}};
    auto m = recognize("mining", build_dictionary(records));
    REQUIRE(m.size() == 1);
    CHECK(m[0].entry.canonical == "mining");
    CHECK(m[0].distance == 0);
  }
  SUBCASE("leftmost wins among overlapping equals") {
    std::vector<DatasetRecord> records = {{EntityType::kTerm, "alpha beta"},
                                          {EntityType::kTerm, "beta gamma"}};
    auto m = recognize("alpha beta gamma", build_dictionary(records));
    REQUIRE(m.size() == 1);
    CHECK(m[0].entry.canonical == "alpha beta");
  }
  SUBCASE("instance beats class") {
    std::vector<DatasetRecord> records = {{EntityType::kPaper, "Papers"}};
    auto m = recognize("papers", build_dictionary(records));
    REQUIRE(m.size() == 1);
    CHECK_FALSE(m[0].entry.is_class);
    CHECK(m[0].entry.canonical == "Papers");
  }
}

TEST_CASE("planted keys are found exactly") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<DatasetRecord> records;
    for (int k = 0; k < 30; ++k) {
      std::string name = random_word(rng, 4, 9, "bdfgklmnprstvz");
      if (rng() % 3 == 0) name += " " + random_word(rng, 4, 8, "aeiou");
      records.push_back({kAllEntityTypes[rng() % kNumEntityTypes], name});
    }
    Dictionary dict = build_dictionary(records);
    const std::string& key = records[rng() % records.size()].name;
    // Two-letter filler can only match two-letter keys exactly; there are
    // none.
    std::string query = "qx " + key + " zq";
    auto mentions = recognize(query, dict);
    auto hit = std::find_if(mentions.begin(), mentions.end(), [&](const Mention& m) {
      return m.start == 3 && m.end == 3 + key.size();
    });
    REQUIRE_MESSAGE(hit != mentions.end(), key);
    CHECK(hit->distance == 0);
    CHECK(fold_ascii(hit->entry.canonical) == fold_ascii(key));
  }
}

TEST_CASE("recognition results are ordered, disjoint and within distance one") {
  std::mt19937_64 rng(99);
  std::vector<DatasetRecord> records;
  for (int k = 0; k < 200; ++k) {
    records.push_back({kAllEntityTypes[rng() % kNumEntityTypes],
                       random_word(rng, 3, 6, "abcde")});
  }
  Dictionary dict = build_dictionary(records);
  for (int trial = 0; trial < 200; ++trial) {
    std::string query;
    for (int w = 0; w < 6; ++w) {
      if (w) query += ' ';
      query += random_word(rng, 1, 6, "abcde");
    }
    auto mentions = recognize(query, dict);
    for (std::size_t i = 0; i < mentions.size(); ++i) {
      const Mention& m = mentions[i];
      CHECK(m.start < m.end);
      CHECK(m.end <= query.size());
      CHECK(m.distance <= 1);
      if (i) CHECK(mentions[i - 1].end <= m.start);
      std::string key = m.entry.is_class ? m.surface : m.entry.canonical;
      CHECK(edit_distance(fold_ascii(m.surface), fold_ascii(key)) <= 1);
    }
  }
}

TEST_CASE("tokenization with named entities") {
  Dictionary dict = retrieval_dictionary();
  std::string q = "papers about information retrieval and data mining";
  auto tokens = tokenize(q, recognize(q, dict));
  CHECK(format_tokens(tokens) ==
        "(papers), (about), (information retrieval), (and), (data mining)");
  CHECK(format_tokens(tokenize(q, {})) ==
        "(papers), (about), (information), (retrieval), (and), (data), "
        "(mining)");
}

TEST_CASE("possessive marker becomes its own token") {
  std::vector<DatasetRecord> records = {{EntityType::kAuthor, "Asoke K. Nandi"}};
  std::string q = "Asoke K. Nandi 's papers";
  auto tokens = tokenize(q, recognize(q, build_dictionary(records)));
  CHECK(format_tokens(tokens) == "(Asoke K. Nandi), ('s), (papers)");
  std::string attached = "Michael Lawrence's papers";
  std::vector<DatasetRecord> ml = {{EntityType::kAuthor, "Michael Lawrence"}};
  CHECK(format_tokens(tokenize(attached, recognize(attached, build_dictionary(ml)))) ==
        "(Michael Lawrence), ('s), (papers)");
}

TEST_CASE("commas split off words") {
  auto tokens = tokenize("survey, semantic, and retrieval", {});
  CHECK(format_tokens(tokens) ==
        "(survey), (,), (semantic), (,), (and), (retrieval)");
}

TEST_CASE("tokens reconstruct the query") {
  std::mt19937_64 rng(5);
  std::vector<DatasetRecord> records;
  for (int k = 0; k < 50; ++k) {
    records.push_back({EntityType::kTerm, random_word(rng, 3, 5, "abc")});
  }
  Dictionary dict = build_dictionary(records);
  auto strip = [](std::string s) {
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    return s;
  };
  for (int trial = 0; trial < 100; ++trial) {
    std::string query;
    for (int w = 0; w < 5; ++w) {
      if (w) query += rng() % 2 ? " " : "  ";
      query += random_word(rng, 1, 5, "abc");
      if (rng() % 5 == 0) query += ",";
      if (rng() % 7 == 0) query += "'s";
    }
    auto mentions = recognize(query, dict);
    auto tokens = tokenize(query, mentions);
    std::string joined;
    std::size_t covering = 0;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      CHECK(tokens[i].index == i);
      joined += tokens[i].text + " ";
      if (tokens[i].mention) ++covering;
    }
    CHECK(strip(joined) == strip(query));
    CHECK(covering == mentions.size());
  }
}
