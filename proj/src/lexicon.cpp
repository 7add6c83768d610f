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

#include "bibnli/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <tuple>

namespace bibnli {

namespace {

constexpr std::size_t kMinFuzzyLength = 3;

// Decodes UTF-8 into code points. Malformed bytes decode to themselves so
// that every input has some representation.
std::u32string decode(std::string_view s, bool fold) {
  std::u32string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    auto c = static_cast<unsigned char>(s[i]);
    char32_t cp = c;
    std::size_t len = 1;
    if (c >= 0xF0) {
      len = 4;
      cp = c & 0x07;
    } else if (c >= 0xE0) {
      len = 3;
      cp = c & 0x0F;
    } else if (c >= 0xC0) {
      len = 2;
      cp = c & 0x1F;
    }
    if (len > 1) {
      bool ok = i + len <= s.size();
      for (std::size_t k = 1; ok && k < len; ++k) {
        auto cc = static_cast<unsigned char>(s[i + k]);
        if ((cc & 0xC0) != 0x80) {
          ok = false;
        } else {
          cp = (cp << 6) | (cc & 0x3F);
        }
      }
      if (!ok) {
        cp = c;
        len = 1;
      }
    }
    if (fold && cp < 0x80) {
      cp = static_cast<char32_t>(std::tolower(static_cast<int>(cp)));
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::size_t levenshtein(std::u32string_view a, std::u32string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<std::size_t> row(b.size() + 1);
  std::iota(row.begin(), row.end(), std::size_t{0});
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t up = row[j];
      std::size_t cost = a[i - 1] == b[j - 1] ? 0 : 1;
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + cost});
      diag = up;
    }
  }
  return row[b.size()];
}

// All strings obtained from `s` by deleting one code point.
std::vector<std::u32string> deletions(const std::u32string& s) {
  std::vector<std::u32string> out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::u32string d = s;
    d.erase(i, 1);
    if (out.empty() || out.back() != d) out.push_back(std::move(d));
  }
  return out;
}

bool is_space(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

bool is_split_punct(char c) { return c == ',' || c == ';'; }

// Split-off punctuation and possessive markers never start or end a mention.
bool is_marker(std::string_view word) {
  return word == "'s" || (word.size() == 1 && is_split_punct(word[0]));
}

}  // namespace

std::string DictEntry::serialized_value() const {
  std::string type_name(to_string(type));
  return is_class ? "class_" + type_name : type_name;
}

ClassSurfaces default_class_surfaces() {
  return {
      {EntityType::kPaper, {"paper", "papers"}},
      {EntityType::kAuthor, {"author", "authors"}},
      {EntityType::kTerm, {"term", "terms"}},
      {EntityType::kSource, {"source", "sources"}},
      {EntityType::kOrganization, {"organization", "organizations"}},
  };
}

std::string fold_ascii(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
  return levenshtein(decode(a, false), decode(b, false));
}

void Dictionary::add(std::string_view surface, DictEntry entry) {
  std::u32string folded = decode(surface, true);
  auto [it, inserted] = exact_.try_emplace(folded, keys_.size());
  if (inserted) {
    keys_.push_back({std::string(surface), folded, {}});
    max_key_words_ = std::max(max_key_words_, split_words(surface).size());
  }
  Key& key = keys_[it->second];
  // Same type and kind under the same surface collapse into one entry; the
  // first canonical spelling is kept.
  for (const DictEntry& e : key.entries) {
    if (e.type == entry.type && e.is_class == entry.is_class) return;
  }
  key.entries.push_back(std::move(entry));
  ++entry_count_;
}

void Dictionary::index_deletions() {
  deletions_.clear();
  for (std::size_t k = 0; k < keys_.size(); ++k) {
    if (keys_[k].folded.size() < kMinFuzzyLength) continue;
    for (auto& d : deletions(keys_[k].folded)) {
      deletions_[std::move(d)].push_back(k);
    }
  }
}

std::span<const DictEntry> Dictionary::lookup(std::string_view surface) const {
  auto it = exact_.find(decode(surface, true));
  if (it == exact_.end()) return {};
  return keys_[it->second].entries;
}

std::vector<Dictionary::Candidate> Dictionary::lookup_approx(
    std::string_view surface) const {
  std::vector<Candidate> out;
  const std::u32string folded = decode(surface, true);
  if (auto it = exact_.find(folded); it != exact_.end()) {
    out.push_back({it->second, 0});
  }
  if (folded.size() < kMinFuzzyLength) return out;

  std::vector<std::size_t> seen;
  auto consider = [&](std::size_t key) {
    if (!out.empty() && out.front().distance == 0 && out.front().key == key) {
      return;
    }
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) return;
    seen.push_back(key);
    const std::u32string& k = keys_[key].folded;
    if (k.size() < kMinFuzzyLength) return;
    if (levenshtein(folded, k) == 1) out.push_back({key, 1});
  };

  // Symmetric deletion: a key within one edit shares a deletion
  // neighbourhood with the query.
  if (auto it = deletions_.find(folded); it != deletions_.end()) {
    for (std::size_t key : it->second) consider(key);
  }
  for (const auto& d : deletions(folded)) {
    if (auto it = exact_.find(d); it != exact_.end()) consider(it->second);
    if (auto it = deletions_.find(d); it != deletions_.end()) {
      for (std::size_t key : it->second) consider(key);
    }
  }
  std::sort(out.begin(), out.end(), [](const Candidate& x, const Candidate& y) {
    return std::tie(x.distance, x.key) < std::tie(y.distance, y.key);
  });
  return out;
}

Dictionary build_dictionary(std::span<const DatasetRecord> records,
                            const ClassSurfaces& class_surfaces) {
  Dictionary dict;
  for (EntityType type : kAllEntityTypes) {
    auto it = class_surfaces.find(type);
    if (it == class_surfaces.end()) continue;
    for (const std::string& surface : it->second) {
      dict.add(surface, DictEntry::class_of(type));
    }
  }
  for (std::size_t i = 0; i < records.size(); ++i) {
    const DatasetRecord& r = records[i];
    bool blank = std::all_of(r.name.begin(), r.name.end(), is_space);
    if (blank) {
      dict.rejected_.push_back({i, "empty name"});
      continue;
    }
    dict.add(r.name, DictEntry::instance(r.type, r.name));
  }
  dict.index_deletions();
  return dict;
}

std::vector<WordSpan> split_words(std::string_view text) {
  std::vector<WordSpan> words;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    if (i >= text.size()) break;
    std::size_t start = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    std::size_t end = i;

    // Peel trailing punctuation and the possessive marker off the chunk.
    std::vector<WordSpan> tail;
    while (end > start) {
      if (is_split_punct(text[end - 1])) {
        tail.push_back({end - 1, end});
        --end;
        continue;
      }
      std::string_view chunk = text.substr(start, end - start);
      if (chunk.size() > 2 && chunk.ends_with("'s")) {
        tail.push_back({end - 2, end});
        end -= 2;
        continue;
      }
      break;
    }
    if (end > start) words.push_back({start, end});
    words.insert(words.end(), tail.rbegin(), tail.rend());
  }
  return words;
}

std::vector<Mention> recognize(std::string_view query, const Dictionary& dict) {
  struct Candidate {
    std::size_t first_word;
    std::size_t last_word;
    std::size_t length;
    int distance;
    std::size_t key;
    DictEntry entry;
  };

  const std::vector<WordSpan> words = split_words(query);
  // One extra word allows a key to match across a single inserted space.
  const std::size_t max_words = dict.max_key_words() + 1;

  std::vector<Candidate> candidates;
  auto word = [&](std::size_t i) {
    return query.substr(words[i].start, words[i].end - words[i].start);
  };
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (is_marker(word(i))) continue;
    for (std::size_t j = i; j < words.size() && j - i < max_words; ++j) {
      if (is_marker(word(j))) continue;
      std::string_view span =
          query.substr(words[i].start, words[j].end - words[i].start);
      for (const auto& c : dict.lookup_approx(span)) {
        auto entries = dict.entries(c.key);
        if (entries.empty()) continue;
        // Instance beats class under the same key.
        auto best = std::find_if(entries.begin(), entries.end(),
                                 [](const DictEntry& e) { return !e.is_class; });
        if (best == entries.end()) best = entries.begin();
        candidates.push_back({i, j, span.size(), c.distance, c.key, *best});
      }
    }
  }

  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) {
                     if (a.length != b.length) return a.length > b.length;
                     if (a.distance != b.distance) return a.distance < b.distance;
                     if (a.first_word != b.first_word) {
                       return a.first_word < b.first_word;
                     }
                     return !a.entry.is_class && b.entry.is_class;
                   });

  std::vector<bool> taken(words.size(), false);
  std::vector<Mention> mentions;
  for (const Candidate& c : candidates) {
    bool free = true;
    for (std::size_t w = c.first_word; w <= c.last_word; ++w) {
      if (taken[w]) {
        free = false;
        break;
      }
    }
    if (!free) continue;
    for (std::size_t w = c.first_word; w <= c.last_word; ++w) taken[w] = true;
    Mention m;
    m.start = words[c.first_word].start;
    m.end = words[c.last_word].end;
    m.surface = std::string(query.substr(m.start, m.end - m.start));
    m.entry = c.entry;
    m.distance = c.distance;
    mentions.push_back(std::move(m));
  }
  std::sort(mentions.begin(), mentions.end(),
            [](const Mention& a, const Mention& b) { return a.start < b.start; });
  return mentions;
}

std::vector<Token> tokenize(std::string_view query,
                            std::span<const Mention> mentions) {
  std::vector<Token> tokens;
  auto add_words = [&](std::size_t from, std::size_t to) {
    if (from >= to) return;
    for (const WordSpan& w : split_words(query.substr(from, to - from))) {
      Token t;
      t.start = from + w.start;
      t.end = from + w.end;
      t.text = std::string(query.substr(t.start, t.end - t.start));
      t.index = tokens.size();
      tokens.push_back(std::move(t));
    }
  };

  std::size_t cursor = 0;
  for (std::size_t m = 0; m < mentions.size(); ++m) {
    const Mention& mention = mentions[m];
    add_words(cursor, mention.start);
    Token t;
    t.start = mention.start;
    t.end = mention.end;
    t.text = std::string(query.substr(mention.start, mention.end - mention.start));
    t.mention = m;
    t.class_mention = mention.entry.is_class;
    t.index = tokens.size();
    tokens.push_back(std::move(t));
    cursor = mention.end;
  }
  add_words(cursor, query.size());
  return tokens;
}

std::string format_tokens(std::span<const Token> tokens) {
  std::string out;
  for (const Token& t : tokens) {
    if (!out.empty()) out += ", ";
    out += '(';
    out += t.text;
    out += ')';
  }
  return out;
}

}  // namespace bibnli
