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

#include "igpipe/metrics.h"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <set>
#include <stdexcept>

#include "igpipe/conllu.h"
#include "igpipe/csv.h"
#include "json.hpp"

namespace igpipe {
namespace {

using json = nlohmann::ordered_json;

std::string Fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

// Reachable count (including |source|) and distance sum by BFS.
std::pair<size_t, size_t> Reach(const SimpleGraph &g, size_t source,
                                std::vector<int> &dist,
                                std::vector<size_t> &queue) {
  std::fill(dist.begin(), dist.end(), -1);
  queue.clear();
  dist[source] = 0;
  queue.push_back(source);
  size_t total = 0;
  for (size_t head = 0; head < queue.size(); ++head) {
    size_t u = queue[head];
    total += static_cast<size_t>(dist[u]);
    for (size_t v : g.adjacency[u]) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return {queue.size(), total};
}

double ClosenessFromReach(size_t reach, size_t total, size_t n) {
  if (reach <= 1 || n <= 1 || total == 0) return 0.0;
  const size_t r = reach - 1;
  // One rounding: (r / total) * (r / (n - 1)) as a single quotient.
  return static_cast<double>(r * r) / static_cast<double>(total * (n - 1));
}

}  // namespace

ClassCounts CountBestClasses(std::string_view entity,
                             std::span<const Mention> mentions) {
  std::map<std::pair<std::string, std::string>, int> best;
  for (const Mention &m : mentions) {
    if (m.entity != entity || !m.slot) continue;
    int &b = best[{m.doc_id, m.statement_id}];
    b = std::max(b, ClassWeight(*m.slot));
  }
  ClassCounts counts{};
  for (const auto &[ref, cls] : best) ++counts[cls - 1];
  return counts;
}

double Visibility(const ClassCounts &counts, size_t statements) {
  if (statements == 0) {
    throw std::invalid_argument("visibility needs at least one statement");
  }
  size_t weighted = 0;
  for (size_t c = 0; c < counts.size(); ++c) {
    weighted += static_cast<size_t>(kVisibilityWeights[c]) * counts[c];
  }
  return static_cast<double>(weighted) / static_cast<double>(statements);
}

double Visibility(std::string_view entity, std::span<const Mention> mentions,
                  size_t statements) {
  return Visibility(CountBestClasses(entity, mentions), statements);
}

size_t SimpleGraph::EdgeCount() const {
  size_t twice = 0;
  for (const auto &adj : adjacency) twice += adj.size();
  return twice / 2;
}

bool SimpleGraph::HasEdge(size_t u, size_t v) const {
  return std::binary_search(adjacency[u].begin(), adjacency[u].end(), v);
}

std::optional<size_t> SimpleGraph::Find(std::string_view name) const {
  for (size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return i;
  }
  return std::nullopt;
}

SimpleGraph SimpleGraph::FromEdges(
    size_t n, std::span<const std::pair<size_t, size_t>> edges) {
  SimpleGraph g;
  g.adjacency.assign(n, {});
  g.kinds.assign(n, EntityKind::kActor);
  for (size_t i = 0; i < n; ++i) g.names.push_back("v" + std::to_string(i));
  std::vector<std::set<size_t>> adj(n);
  for (auto [u, v] : edges) {
    if (u == v) continue;
    adj[u].insert(v);
    adj[v].insert(u);
  }
  for (size_t i = 0; i < n; ++i) {
    g.adjacency[i].assign(adj[i].begin(), adj[i].end());
  }
  return g;
}

SimpleGraph TwoSection(const Hypergraph &h) {
  SimpleGraph g;
  const size_t n = h.vertices.size();
  std::vector<std::set<size_t>> adj(n);
  for (const Vertex &v : h.vertices) {
    g.names.push_back(v.name);
    g.kinds.push_back(v.kind);
  }
  for (const Hyperedge &e : h.edges) {
    for (size_t a : e.members) {
      for (size_t b : e.members) {
        if (a != b) adj[a].insert(b);
      }
    }
  }
  g.adjacency.resize(n);
  for (size_t i = 0; i < n; ++i) {
    g.adjacency[i].assign(adj[i].begin(), adj[i].end());
  }
  return g;
}

double Closeness(const SimpleGraph &g, size_t vertex) {
  if (vertex >= g.size()) {
    throw LookupError("no vertex " + std::to_string(vertex));
  }
  std::vector<int> dist(g.size());
  std::vector<size_t> queue;
  queue.reserve(g.size());
  auto [reach, total] = Reach(g, vertex, dist, queue);
  return ClosenessFromReach(reach, total, g.size());
}

std::vector<double> ClosenessAllSerial(const SimpleGraph &g) {
  const size_t n = g.size();
  std::vector<double> out(n);
  std::vector<int> dist(n);
  std::vector<size_t> queue;
  queue.reserve(n);
  for (size_t v = 0; v < n; ++v) {
    auto [reach, total] = Reach(g, v, dist, queue);
    out[v] = ClosenessFromReach(reach, total, n);
  }
  return out;
}

std::vector<double> ClosenessAll(const SimpleGraph &g) {
  const long n = static_cast<long>(g.size());
  std::vector<double> out(n);
#pragma omp parallel
  {
    std::vector<int> dist(n);
    std::vector<size_t> queue;
    queue.reserve(n);
#pragma omp for schedule(dynamic, 8)
    for (long v = 0; v < n; ++v) {
      auto [reach, total] = Reach(g, static_cast<size_t>(v), dist, queue);
      out[v] = ClosenessFromReach(reach, total, static_cast<size_t>(n));
    }
  }
  return out;
}

std::vector<MetricsRow> MetricsTable(const Hypergraph &h,
                                     std::span<const Mention> mentions,
                                     size_t statements) {
  std::vector<double> closeness = ClosenessAll(TwoSection(h));
  std::vector<MetricsRow> rows;
  rows.reserve(h.vertices.size());
  for (size_t i = 0; i < h.vertices.size(); ++i) {
    MetricsRow row;
    row.entity = h.vertices[i].name;
    row.kind = h.vertices[i].kind;
    row.counts = CountBestClasses(row.entity, mentions);
    row.visibility = Visibility(row.counts, statements);
    row.closeness = closeness[i];
    row.statements = statements;
    rows.push_back(std::move(row));
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const MetricsRow &a, const MetricsRow &b) {
                     if (a.visibility != b.visibility) {
                       return a.visibility > b.visibility;
                     }
                     if (a.closeness != b.closeness) {
                       return a.closeness > b.closeness;
                     }
                     return a.entity < b.entity;
                   });
  return rows;
}

std::vector<RankRow> RankComparison(std::span<const MetricsRow> rows) {
  auto dense = [&](auto value) {
    std::vector<double> distinct;
    for (const MetricsRow &r : rows) distinct.push_back(value(r));
    std::sort(distinct.begin(), distinct.end(), std::greater<>());
    distinct.erase(std::unique(distinct.begin(), distinct.end()),
                   distinct.end());
    std::vector<int> ranks;
    for (const MetricsRow &r : rows) {
      auto it = std::find(distinct.begin(), distinct.end(), value(r));
      ranks.push_back(static_cast<int>(it - distinct.begin()) + 1);
    }
    return ranks;
  };
  std::vector<int> vis = dense([](const MetricsRow &r) { return r.visibility; });
  std::vector<int> cen = dense([](const MetricsRow &r) { return r.closeness; });
  std::vector<RankRow> out;
  for (size_t i = 0; i < rows.size(); ++i) {
    out.push_back({rows[i].entity, vis[i], cen[i], vis[i] - cen[i]});
  }
  return out;
}

std::string MetricsCsv(std::span<const MetricsRow> rows) {
  std::string out = CsvLine({"entity", "kind", "visibility", "closeness"});
  for (const MetricsRow &r : rows) {
    out += CsvLine({r.entity, std::string(EntityKindName(r.kind)),
                    Fixed2(r.visibility), Fixed2(r.closeness)});
  }
  return out;
}

std::string MetricsJson(std::span<const MetricsRow> rows) {
  json arr = json::array();
  for (const MetricsRow &r : rows) {
    json counts = json::object();
    for (int c = 6; c >= 1; --c) {
      counts[std::to_string(c)] = r.counts[c - 1];
    }
    arr.push_back({{"entity", r.entity},
                   {"kind", EntityKindName(r.kind)},
                   {"visibility", r.visibility},
                   {"closeness", r.closeness},
                   {"class_counts", counts},
                   {"statements", r.statements}});
  }
  return json{{"rows", arr}}.dump(2) + "\n";
}

std::string RanksCsv(std::span<const RankRow> ranks) {
  std::string out =
      CsvLine({"entity", "visibility_rank", "centrality_rank", "delta"});
  for (const RankRow &r : ranks) {
    out += CsvLine({r.entity, std::to_string(r.visibility_rank),
                    std::to_string(r.centrality_rank), std::to_string(r.delta)});
  }
  return out;
}

std::string ScatterJson(std::span<const MetricsRow> rows) {
  json points = json::array();
  int actor_label = 0;
  for (const MetricsRow &r : rows) {
    json p = {{"entity", r.entity},
              {"kind", EntityKindName(r.kind)},
              {"visibility", r.visibility},
              {"closeness", r.closeness}};
    p["label"] = r.kind == EntityKind::kActor ? json(++actor_label) : json();
    points.push_back(std::move(p));
  }
  return json{{"x", "visibility"}, {"y", "closeness"}, {"points", points}}
             .dump(2) +
         "\n";
}

std::string HistogramCsv(
    const std::map<GraphMode, std::map<size_t, size_t>> &histograms) {
  std::string out = CsvLine({"mode", "size", "count"});
  for (const auto &[mode, hist] : histograms) {
    for (const auto &[size, count] : hist) {
      out += CsvLine({std::string(GraphModeName(mode)), std::to_string(size),
                      std::to_string(count)});
    }
  }
  return out;
}

}  // namespace igpipe
