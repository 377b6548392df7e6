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

#include "igpipe/lexicon.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "igpipe/conllu.h"
#include "igpipe/csv.h"

namespace igpipe {

std::string_view EntityKindName(EntityKind kind) {
  return kind == EntityKind::kActor ? "actor" : "object";
}

std::optional<EntityKind> ParseEntityKind(std::string_view name) {
  std::string lower = Lowercase(name);
  if (lower == "actor") return EntityKind::kActor;
  if (lower == "object") return EntityKind::kObject;
  return std::nullopt;
}

std::string Lowercase(std::string_view s) {
  std::string out(s);
  for (char &c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::vector<std::string> SurfaceLemmas(std::string_view surface) {
  std::vector<std::string> out;
  std::istringstream in{std::string(surface)};
  std::string word;
  while (in >> word) out.push_back(Lowercase(word));
  return out;
}

EntityLexicon::EntityLexicon(std::vector<LexiconEntry> entries)
    : entries_(std::move(entries)) {
  std::set<std::string> names;
  std::map<std::vector<std::string>, size_t> owner;
  for (size_t i = 0; i < entries_.size(); ++i) {
    LexiconEntry &e = entries_[i];
    if (e.canonical_name.empty()) {
      throw ValidationError("lexicon: empty canonical name");
    }
    if (!names.insert(e.canonical_name).second) {
      throw ValidationError("lexicon: duplicate canonical name '" +
                            e.canonical_name + "'");
    }
    if (e.surface_forms.empty()) {
      throw ValidationError("lexicon: '" + e.canonical_name +
                            "' has no surface forms");
    }
    for (auto &form : e.surface_forms) {
      if (form.empty()) {
        throw ValidationError("lexicon: empty surface form for '" +
                              e.canonical_name + "'");
      }
      for (std::string &lemma : form) lemma = Lowercase(lemma);
      auto [it, inserted] = owner.emplace(form, i);
      if (!inserted && it->second != i) {
        throw ValidationError("lexicon: surface form shared by '" +
                              entries_[it->second].canonical_name + "' and '" +
                              e.canonical_name + "'");
      }
      if (inserted) by_first_[form.front()].push_back({form, i});
    }
  }
  for (auto &[first, forms] : by_first_) {
    std::sort(forms.begin(), forms.end(), [](const Form &a, const Form &b) {
      if (a.lemmas.size() != b.lemmas.size()) {
        return a.lemmas.size() > b.lemmas.size();
      }
      return a.lemmas < b.lemmas;
    });
  }
}

EntityLexicon EntityLexicon::FromCsv(std::string_view csv) {
  std::vector<CsvRow> rows =
      ReadCsvColumns(csv, {"canonical_name", "kind", "surface_form"});
  std::vector<LexiconEntry> entries;
  std::map<std::string, size_t> index;
  for (size_t r = 0; r < rows.size(); ++r) {
    const CsvRow &row = rows[r];
    const int line = static_cast<int>(r) + 2;
    std::optional<EntityKind> kind = ParseEntityKind(row[1]);
    if (!kind) throw ParseError(line, "unknown entity kind '" + row[1] + "'");
    auto [it, inserted] = index.emplace(row[0], entries.size());
    if (inserted) {
      entries.push_back({row[0], *kind, {}});
    } else if (entries[it->second].kind != *kind) {
      throw ParseError(line, "conflicting kinds for '" + row[0] + "'");
    }
    entries[it->second].surface_forms.push_back(SurfaceLemmas(row[2]));
  }
  return EntityLexicon(std::move(entries));
}

EntityLexicon EntityLexicon::ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return FromCsv(buf.str());
}

std::optional<size_t> EntityLexicon::Find(
    std::string_view canonical_name) const {
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].canonical_name == canonical_name) return i;
  }
  return std::nullopt;
}

std::optional<LexiconMatch> EntityLexicon::LongestMatch(
    std::span<const std::string> lemmas) const {
  if (lemmas.empty()) return std::nullopt;
  auto it = by_first_.find(Lowercase(lemmas.front()));
  if (it == by_first_.end()) return std::nullopt;
  for (const Form &form : it->second) {
    if (form.lemmas.size() > lemmas.size()) continue;
    bool ok = true;
    for (size_t i = 1; i < form.lemmas.size() && ok; ++i) {
      ok = Lowercase(lemmas[i]) == form.lemmas[i];
    }
    if (ok) return LexiconMatch{form.entry, form.lemmas.size()};
  }
  return std::nullopt;
}

}  // namespace igpipe
