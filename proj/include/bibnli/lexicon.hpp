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

// Dictionary-based recognition of bibliographic named entities.
//
// The dictionary maps surface strings to entries. An entry is either an
// instance of one of the five entity types ("information retrieval" is a
// Term) or the class word for a type ("papers" is class_Paper). Lookup is
// case-insensitive and tolerates one edit (insertion, deletion or
// substitution of a single character) so that singular/plural variants of
// instance names are still found.

#ifndef BIBNLI_LEXICON_HPP_
#define BIBNLI_LEXICON_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bibnli/entity.hpp"

namespace bibnli {

struct DictEntry {
  EntityType type = EntityType::kPaper;
  bool is_class = false;
  // Dataset spelling for instances; empty for class entries.
  std::string canonical;

  static DictEntry instance(EntityType type, std::string canonical) {
    return {type, false, std::move(canonical)};
  }
  static DictEntry class_of(EntityType type) { return {type, true, {}}; }

  // The dictionary value: "Term" for instances, "class_Term" for classes.
  std::string serialized_value() const;

  friend bool operator==(const DictEntry&, const DictEntry&) = default;
};

// One row of the dataset the dictionary is built from.
struct DatasetRecord {
  EntityType type = EntityType::kPaper;
  std::string name;
};

// Configured class-word forms per entity type.
using ClassSurfaces = std::map<EntityType, std::vector<std::string>>;

// paper/papers, author/authors, term/terms, source/sources,
// organization/organizations.
ClassSurfaces default_class_surfaces();

struct RejectedRecord {
  std::size_t position = 0;  // index into the input records
  std::string reason;
};

// Immutable after construction; safe for concurrent lookups.
class Dictionary {
 public:
  struct Candidate {
    std::size_t key = 0;  // key id
    int distance = 0;
  };

  Dictionary() = default;

  // Total number of (surface, entry) pairs.
  std::size_t size() const { return entry_count_; }
  std::size_t key_count() const { return keys_.size(); }

  // Entries registered under `surface` (case-insensitive), or empty.
  std::span<const DictEntry> lookup(std::string_view surface) const;

  // Keys within edit distance 1 of `surface`, exact matches included.
  // Surfaces or keys shorter than three characters only match exactly.
  std::vector<Candidate> lookup_approx(std::string_view surface) const;

  const std::string& key_text(std::size_t key) const { return keys_[key].text; }
  std::span<const DictEntry> entries(std::size_t key) const {
    return keys_[key].entries;
  }

  // Largest number of whitespace-separated words in any key.
  std::size_t max_key_words() const { return max_key_words_; }

  const std::vector<RejectedRecord>& rejected() const { return rejected_; }

 private:
  friend Dictionary build_dictionary(std::span<const DatasetRecord>,
                                     const ClassSurfaces&);

  struct Key {
    std::string text;    // first-seen spelling
    std::u32string folded;
    std::vector<DictEntry> entries;
  };

  void add(std::string_view surface, DictEntry entry);
  void index_deletions();

  std::vector<Key> keys_;
  std::unordered_map<std::u32string, std::size_t> exact_;
  // Every single-character deletion of every key, mapped back to the keys.
  std::unordered_map<std::u32string, std::vector<std::size_t>> deletions_;
  std::size_t entry_count_ = 0;
  std::size_t max_key_words_ = 1;
  std::vector<RejectedRecord> rejected_;
};

Dictionary build_dictionary(std::span<const DatasetRecord> records,
                            const ClassSurfaces& class_surfaces =
                                default_class_surfaces());

// Levenshtein distance with unit costs, computed over Unicode code points.
std::size_t edit_distance(std::string_view a, std::string_view b);

struct Mention {
  std::size_t start = 0;  // byte offsets into the query, half-open
  std::size_t end = 0;
  std::string surface;
  DictEntry entry;
  int distance = 0;  // 0 or 1

  friend bool operator==(const Mention&, const Mention&) = default;
};

// Scans `query` for non-overlapping dictionary matches. Candidate spans are
// whole words. Ties are resolved by: longer span, then exact over fuzzy, then
// leftmost, then instance over class. Result is sorted by start offset.
std::vector<Mention> recognize(std::string_view query, const Dictionary& dict);

struct Token {
  std::string text;
  std::optional<std::size_t> mention;  // index into the mention list
  bool class_mention = false;          // the mention is a class word
  std::size_t index = 0;
  std::size_t start = 0;  // byte offsets into the query
  std::size_t end = 0;

  friend bool operator==(const Token&, const Token&) = default;
};

// Each mention becomes one token; the remaining text is split on whitespace
// with commas, semicolons and the possessive "'s" split off.
std::vector<Token> tokenize(std::string_view query,
                            std::span<const Mention> mentions);

// "(papers), (about), (information retrieval)"
std::string format_tokens(std::span<const Token> tokens);

struct WordSpan {
  std::size_t start = 0;
  std::size_t end = 0;
};

// Whitespace words of `text` with trailing commas/semicolons and a
// possessive "'s" split into their own words. Offsets are relative to text.
std::vector<WordSpan> split_words(std::string_view text);

// ASCII lowercase copy.
std::string fold_ascii(std::string_view text);

}  // namespace bibnli

#endif  // BIBNLI_LEXICON_HPP_
