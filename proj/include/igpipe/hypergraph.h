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

// Actor/object mentions in tagged statements and the statement hypergraph
// H = (V, E): vertices are entities, each statement with at least one
// qualifying mention is a hyperedge over the entities it mentions.

#ifndef IGPIPE_HYPERGRAPH_H_
#define IGPIPE_HYPERGRAPH_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "igpipe/ig_types.h"
#include "igpipe/lexicon.h"
#include "igpipe/tagger.h"

namespace igpipe {

// Visibility classes; the enumerator value is the class weight.
enum class MentionClass {
  kIndirectObjectProperty = 1,
  kDirectObjectProperty = 2,  // also properties of the constituting side
  kAttributeProperty = 3,     // also properties of the constituted side
  kIndirectObject = 4,
  kDirectObject = 5,  // or the constituting side of a constitutive statement
  kAttribute = 6,     // or the constituted side of a constitutive statement
};

constexpr int ClassWeight(MentionClass c) { return static_cast<int>(c); }
std::string_view MentionClassName(MentionClass c);

// Class of a mention found in a region tagged |tag|; nullopt for regions that
// carry no visibility weight (Aim, Deontic, Context, Untagged, ...).
std::optional<MentionClass> MentionClassForTag(IGTag tag);

struct Mention {
  std::string entity;  // canonical name
  EntityKind kind = EntityKind::kActor;
  std::string doc_id;
  std::string statement_id;
  IGTag tag = IGTag::kUntagged;  // tag of the span's head token
  std::optional<MentionClass> slot;
  int first_token = 0;  // inclusive token id range
  int last_token = 0;
};

// Greedy left-to-right longest lemma-sequence matching, case-insensitive,
// inside each maximal run of equally tagged tokens; a match can never cross
// a tag boundary.
std::vector<Mention> ExtractMentions(const AnnotatedStatement &statement,
                                     const EntityLexicon &lexicon);

// Concatenated mentions of all statements in input order. The parallel
// version spreads statements over OpenMP threads.
std::vector<Mention> ExtractCorpusMentions(
    std::span<const AnnotatedStatement> statements,
    const EntityLexicon &lexicon);
std::vector<Mention> ExtractCorpusMentionsSerial(
    std::span<const AnnotatedStatement> statements,
    const EntityLexicon &lexicon);

enum class GraphMode { kActorsOnly, kActorsAndObjects };

std::string_view GraphModeName(GraphMode mode);  // "actors", "actors-objects"
std::optional<GraphMode> ParseGraphMode(std::string_view name);

struct Vertex {
  std::string name;
  EntityKind kind = EntityKind::kActor;
};

struct Hyperedge {
  std::string doc_id;
  std::string statement_id;
  std::vector<size_t> members;  // distinct vertex indices, ascending
};

struct Hypergraph {
  std::vector<Vertex> vertices;  // sorted by name
  std::vector<Hyperedge> edges;  // in order of first mention
  // Lexicon entities of the selected kinds that label no vertex.
  std::vector<std::string> isolated;

  std::optional<size_t> FindVertex(std::string_view name) const;
  size_t Degree(size_t vertex) const;
};

// One hyperedge per statement with at least one mention of a kind selected
// by |mode|. |lexicon|, when given, fills the isolated-entity list.
Hypergraph BuildHypergraph(std::span<const Mention> mentions, GraphMode mode,
                           const EntityLexicon *lexicon = nullptr);

// Number of hyperedges per cardinality.
std::map<size_t, size_t> EdgeSizeHistogram(const Hypergraph &h);

}  // namespace igpipe

#endif  // IGPIPE_HYPERGRAPH_H_
