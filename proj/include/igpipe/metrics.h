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

// Per-entity visibility and closeness centrality.
//
// visibility(e) = sum_c w_c * n_c / N, where n_c counts the statements in
// which the best (highest-weight) mention of e has class c, w_c is the class
// weight (6 for attribute ... 1 for indirect-object property) and N is the
// number of statements in the corpus.
//
// Closeness is taken on the two-section of the hypergraph. For a vertex v
// whose component has r vertices in a graph of n vertices,
//
//   closeness(v) = (r - 1) / sum_u d(v, u) * (r - 1) / (n - 1)
//
// and 0 when v is isolated.

#ifndef IGPIPE_METRICS_H_
#define IGPIPE_METRICS_H_

#include <array>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "igpipe/hypergraph.h"

namespace igpipe {

// Index c - 1 holds w_c.
inline constexpr std::array<int, 6> kVisibilityWeights = {1, 2, 3, 4, 5, 6};

// n_c at index c - 1.
using ClassCounts = std::array<size_t, 6>;

// Per-statement best class of |entity| over |mentions|. Mentions without a
// class are ignored.
ClassCounts CountBestClasses(std::string_view entity,
                             std::span<const Mention> mentions);

// Throws std::invalid_argument when statements == 0.
double Visibility(const ClassCounts &counts, size_t statements);
double Visibility(std::string_view entity, std::span<const Mention> mentions,
                  size_t statements);

struct SimpleGraph {
  std::vector<std::string> names;
  std::vector<EntityKind> kinds;
  std::vector<std::vector<size_t>> adjacency;  // sorted, no self-loops

  size_t size() const { return names.size(); }
  size_t EdgeCount() const;
  bool HasEdge(size_t u, size_t v) const;
  std::optional<size_t> Find(std::string_view name) const;

  // Undirected graph from an edge list; duplicates and self-loops dropped.
  static SimpleGraph FromEdges(size_t n,
                               std::span<const std::pair<size_t, size_t>> edges);
};

// Vertices of |h| (same order); u-v adjacent iff they share a hyperedge.
SimpleGraph TwoSection(const Hypergraph &h);

// BFS closeness of a single vertex. Throws LookupError for an unknown vertex.
double Closeness(const SimpleGraph &g, size_t vertex);

// Closeness of every vertex. The default runs one BFS per source vertex in an
// OpenMP parallel loop; the serial version is the reference it is tested
// against.
std::vector<double> ClosenessAll(const SimpleGraph &g);
std::vector<double> ClosenessAllSerial(const SimpleGraph &g);

struct MetricsRow {
  std::string entity;
  EntityKind kind = EntityKind::kActor;
  double visibility = 0.0;
  double closeness = 0.0;
  ClassCounts counts{};
  size_t statements = 0;  // N
};

// One row per vertex of |h|, sorted by visibility, then closeness (both
// descending), then name.
std::vector<MetricsRow> MetricsTable(const Hypergraph &h,
                                     std::span<const Mention> mentions,
                                     size_t statements);

struct RankRow {
  std::string entity;
  int visibility_rank = 0;
  int centrality_rank = 0;
  int delta = 0;  // visibility_rank - centrality_rank
};

// Dense ranks (1 = highest, ties share a rank) in row order.
std::vector<RankRow> RankComparison(std::span<const MetricsRow> rows);

// entity,kind,visibility,closeness with two decimals.
std::string MetricsCsv(std::span<const MetricsRow> rows);
// Full precision including class counts.
std::string MetricsJson(std::span<const MetricsRow> rows);
// entity,visibility_rank,centrality_rank,delta
std::string RanksCsv(std::span<const RankRow> ranks);
// Visibility-vs-closeness points; actors are numbered in row order.
std::string ScatterJson(std::span<const MetricsRow> rows);
// mode,size,count
std::string HistogramCsv(
    const std::map<GraphMode, std::map<size_t, size_t>> &histograms);

}  // namespace igpipe

#endif  // IGPIPE_METRICS_H_
