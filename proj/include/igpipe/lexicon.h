// Copyright 2026 The igpipe Authors.
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

// Curated dictionary of actors and objects with their lemma-sequence surface
// forms.

#ifndef IGPIPE_LEXICON_H_
#define IGPIPE_LEXICON_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace igpipe {

enum class EntityKind { kActor, kObject };

std::string_view EntityKindName(EntityKind kind);
std::optional<EntityKind> ParseEntityKind(std::string_view name);

struct LexiconEntry {
  std::string canonical_name;
  EntityKind kind = EntityKind::kActor;
  // Each form is a non-empty sequence of lowercased lemmas.
  std::vector<std::vector<std::string>> surface_forms;
};

struct LexiconMatch {
  size_t entry = 0;   // index into entries()
  size_t length = 0;  // matched lemma count
};

class EntityLexicon {
 public:
  EntityLexicon() = default;
  // Throws ValidationError on duplicate canonical names, empty forms, or a
  // form shared by two entries.
  explicit EntityLexicon(std::vector<LexiconEntry> entries);

  // CSV with columns canonical_name, kind, surface_form; one row per form.
  static EntityLexicon FromCsv(std::string_view csv);
  static EntityLexicon ReadFile(const std::string &path);

  const std::vector<LexiconEntry> &entries() const { return entries_; }
  const LexiconEntry &entry(size_t index) const { return entries_[index]; }
  std::optional<size_t> Find(std::string_view canonical_name) const;

  // Longest surface form that is a prefix of |lemmas| (case-insensitive).
  std::optional<LexiconMatch> LongestMatch(
      std::span<const std::string> lemmas) const;

 private:
  struct Form {
    std::vector<std::string> lemmas;
    size_t entry;
  };

  std::vector<LexiconEntry> entries_;
  // Forms keyed by first lemma, longest first.
  std::map<std::string, std::vector<Form>, std::less<>> by_first_;
};

// ASCII lowercase; other bytes pass through unchanged.
std::string Lowercase(std::string_view s);

// Splits a surface form on whitespace into lowercased lemmas.
std::vector<std::string> SurfaceLemmas(std::string_view surface);

}  // namespace igpipe

#endif  // IGPIPE_LEXICON_H_
