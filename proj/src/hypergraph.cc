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

#include "igpipe/hypergraph.h"

#include <algorithm>
#include <exception>
#include <set>

namespace igpipe {

std::string_view MentionClassName(MentionClass c) {
  switch (c) {
    case MentionClass::kAttribute:
      return "attribute";
    case MentionClass::kDirectObject:
      return "direct_object";
    case MentionClass::kIndirectObject:
      return "indirect_object";
    case MentionClass::kAttributeProperty:
      return "attribute_property";
    case MentionClass::kDirectObjectProperty:
      return "direct_object_property";
    case MentionClass::kIndirectObjectProperty:
      return "indirect_object_property";
  }
  return "";
}

std::optional<MentionClass> MentionClassForTag(IGTag tag) {
  switch (tag) {
    case IGTag::kAttribute:
    case IGTag::kConstitutedEntity:
      return MentionClass::kAttribute;
    case IGTag::kDirectObject:
    case IGTag::kConstitutingProperties:
      return MentionClass::kDirectObject;
    case IGTag::kIndirectObject:
      return MentionClass::kIndirectObject;
    case IGTag::kAttributeProp:
    case IGTag::kConstitutedEntityProp:
      return MentionClass::kAttributeProperty;
    case IGTag::kDirectObjectProp:
    case IGTag::kConstitutingPropertiesProp:
      return MentionClass::kDirectObjectProperty;
    case IGTag::kIndirectObjectProp:
      return MentionClass::kIndirectObjectProperty;
    default:
      return std::nullopt;
  }
}

std::vector<Mention> ExtractMentions(const AnnotatedStatement &statement,
                                     const EntityLexicon &lexicon) {
  std::vector<Mention> out;
  const size_t n = statement.size();
  std::vector<std::string> lemmas;
  lemmas.reserve(n);
  for (const Token &t : statement.tokens) lemmas.push_back(t.LemmaOrForm());

  size_t region_begin = 0;
  while (region_begin < n) {
    size_t region_end = region_begin + 1;
    while (region_end < n &&
           statement.tags[region_end] == statement.tags[region_begin]) {
      ++region_end;
    }
    size_t i = region_begin;
    while (i < region_end) {
      std::span<const std::string> rest(lemmas.data() + i, region_end - i);
      std::optional<LexiconMatch> m = lexicon.LongestMatch(rest);
      if (!m) {
        ++i;
        continue;
      }
      const LexiconEntry &entry = lexicon.entry(m->entry);
      const int first = statement.tokens[i].id;
      const int last = first + static_cast<int>(m->length) - 1;
      // Head: first token whose governor lies outside the span.
      size_t head = i;
      for (size_t j = i; j < i + m->length; ++j) {
        int h = statement.tokens[j].head;
        if (h < first || h > last) {
          head = j;
          break;
        }
      }
      Mention mention;
      mention.entity = entry.canonical_name;
      mention.kind = entry.kind;
      mention.doc_id = statement.doc_id;
      mention.statement_id = statement.statement_id;
      mention.tag = statement.tags[head];
      mention.slot = MentionClassForTag(mention.tag);
      mention.first_token = first;
      mention.last_token = last;
      out.push_back(std::move(mention));
      i += m->length;
    }
    region_begin = region_end;
  }
  return out;
}

std::vector<Mention> ExtractCorpusMentionsSerial(
    std::span<const AnnotatedStatement> statements,
    const EntityLexicon &lexicon) {
  std::vector<Mention> out;
  for (const AnnotatedStatement &s : statements) {
    std::vector<Mention> m = ExtractMentions(s, lexicon);
    out.insert(out.end(), m.begin(), m.end());
  }
  return out;
}

std::vector<Mention> ExtractCorpusMentions(
    std::span<const AnnotatedStatement> statements,
    const EntityLexicon &lexicon) {
  const long n = static_cast<long>(statements.size());
  std::vector<std::vector<Mention>> per(n);
  std::vector<std::exception_ptr> errors(n);
#pragma omp parallel for schedule(dynamic, 16)
  for (long i = 0; i < n; ++i) {
    try {
      per[i] = ExtractMentions(statements[i], lexicon);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto &e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<Mention> out;
  for (auto &m : per) {
    out.insert(out.end(), std::make_move_iterator(m.begin()),
               std::make_move_iterator(m.end()));
  }
  return out;
}

std::string_view GraphModeName(GraphMode mode) {
  return mode == GraphMode::kActorsOnly ? "actors" : "actors-objects";
}

std::optional<GraphMode> ParseGraphMode(std::string_view name) {
  if (name == "actors") return GraphMode::kActorsOnly;
  if (name == "actors-objects") return GraphMode::kActorsAndObjects;
  return std::nullopt;
}

std::optional<size_t> Hypergraph::FindVertex(std::string_view name) const {
  auto it = std::lower_bound(
      vertices.begin(), vertices.end(), name,
      [](const Vertex &v, std::string_view n) { return v.name < n; });
  if (it == vertices.end() || it->name != name) return std::nullopt;
  return it - vertices.begin();
}

size_t Hypergraph::Degree(size_t vertex) const {
  size_t d = 0;
  for (const Hyperedge &e : edges) {
    d += std::binary_search(e.members.begin(), e.members.end(), vertex);
  }
  return d;
}

Hypergraph BuildHypergraph(std::span<const Mention> mentions, GraphMode mode,
                           const EntityLexicon *lexicon) {
  auto selected = [mode](EntityKind kind) {
    return mode == GraphMode::kActorsAndObjects || kind == EntityKind::kActor;
  };

  // Statement refs in order of first appearance, each with its entity set.
  std::vector<std::pair<std::string, std::string>> refs;
  std::map<std::pair<std::string, std::string>, std::set<std::string>> members;
  std::map<std::string, EntityKind> kinds;
  for (const Mention &m : mentions) {
    if (!selected(m.kind)) continue;
    auto ref = std::make_pair(m.doc_id, m.statement_id);
    auto [it, inserted] = members.try_emplace(ref);
    if (inserted) refs.push_back(ref);
    it->second.insert(m.entity);
    kinds.emplace(m.entity, m.kind);
  }

  Hypergraph h;
  for (const auto &[name, kind] : kinds) h.vertices.push_back({name, kind});
  for (const auto &ref : refs) {
    Hyperedge e{ref.first, ref.second, {}};
    for (const std::string &name : members[ref]) {
      e.members.push_back(*h.FindVertex(name));
    }
    h.edges.push_back(std::move(e));
  }
  if (lexicon != nullptr) {
    for (const LexiconEntry &entry : lexicon->entries()) {
      if (selected(entry.kind) && !kinds.count(entry.canonical_name)) {
        h.isolated.push_back(entry.canonical_name);
      }
    }
    std::sort(h.isolated.begin(), h.isolated.end());
  }
  return h;
}

std::map<size_t, size_t> EdgeSizeHistogram(const Hypergraph &h) {
  std::map<size_t, size_t> hist;
  for (const Hyperedge &e : h.edges) ++hist[e.members.size()];
  return hist;
}

}  // namespace igpipe
