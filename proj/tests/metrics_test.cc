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

#include <random>

#include "closeness_oracle.h"
#include "gtest/gtest.h"
#include "json.hpp"

namespace igpipe {
namespace {

using testing::CompareClosenessWithOracle;
using testing::OracleCloseness;

Mention At(std::string entity, std::string stmt, MentionClass c,
           EntityKind kind = EntityKind::kActor) {
  Mention m;
  m.entity = std::move(entity);
  m.kind = kind;
  m.doc_id = "d";
  m.statement_id = std::move(stmt);
  m.slot = c;
  return m;
}

TEST(VisibilityTest, SingleAttribute) {
  std::vector<Mention> m = {At("A", "s1", MentionClass::kAttribute)};
  EXPECT_EQ(Visibility("A", m, 1), 6.0);
  EXPECT_EQ(Visibility("B", m, 1), 0.0);
  EXPECT_THROW(Visibility("A", m, 0), std::invalid_argument);
}

TEST(VisibilityTest, TwoAttributesOneIndirectObjectOverFive) {
  std::vector<Mention> m = {At("A", "s1", MentionClass::kAttribute),
                            At("A", "s2", MentionClass::kAttribute),
                            At("A", "s3", MentionClass::kIndirectObject),
                            At("B", "s4", MentionClass::kDirectObject)};
  EXPECT_EQ(Visibility("A", m, 5), (6.0 * 2 + 4.0 * 1) / 5);
  EXPECT_EQ(Visibility("A", m, 5), 3.2);
}

TEST(VisibilityTest, BestClassPerStatement) {
  std::vector<Mention> m = {At("A", "s1", MentionClass::kIndirectObject),
                            At("A", "s1", MentionClass::kAttribute),
                            At("A", "s1", MentionClass::kDirectObjectProperty)};
  ClassCounts c = CountBestClasses("A", m);
  EXPECT_EQ(c, (ClassCounts{0, 0, 0, 0, 0, 1}));
  Mention unclassed = At("A", "s2", MentionClass::kAttribute);
  unclassed.slot.reset();
  m.push_back(unclassed);
  EXPECT_EQ(CountBestClasses("A", m), c);
}

TEST(VisibilityTest, DoublingCorpusIsInvariant) {
  std::vector<Mention> m = {At("A", "s1", MentionClass::kAttribute),
                            At("A", "s2", MentionClass::kIndirectObject),
                            At("A", "s3", MentionClass::kAttributeProperty)};
  std::vector<Mention> doubled = m;
  for (const Mention &x : m) {
    Mention y = x;
    y.statement_id += "'";
    doubled.push_back(y);
  }
  EXPECT_DOUBLE_EQ(Visibility("A", doubled, 14), Visibility("A", m, 7));
}

TEST(VisibilityTest, UpgradingAMentionIncreasesVisibility) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Mention> m;
    for (int s = 0; s < 6; ++s) {
      m.push_back(At("A", "s" + std::to_string(s),
                     static_cast<MentionClass>(1 + rng() % 5)));
    }
    size_t pick = rng() % m.size();
    double before = Visibility("A", m, 10);
    m[pick].slot = static_cast<MentionClass>(static_cast<int>(*m[pick].slot) + 1);
    EXPECT_GT(Visibility("A", m, 10), before);
  }
}

TEST(ClosenessTest, StarAndPath) {
  std::vector<std::pair<size_t, size_t>> star = {{0, 1}, {0, 2}, {0, 3}, {0, 4}};
  SimpleGraph g = SimpleGraph::FromEdges(5, star);
  EXPECT_EQ(Closeness(g, 0), 1.0);
  EXPECT_EQ(Closeness(g, 1), 4.0 / 7.0);
  std::vector<std::pair<size_t, size_t>> path = {{0, 1}, {1, 2}};
  SimpleGraph p = SimpleGraph::FromEdges(3, path);
  EXPECT_EQ(Closeness(p, 0), 2.0 / 3.0);
  EXPECT_EQ(Closeness(p, 1), 1.0);
  EXPECT_THROW(Closeness(p, 3), LookupError);
}

TEST(ClosenessTest, DisconnectedAndSingleton) {
  // Path a-b-c plus an isolated vertex: (2/3) * (2/3).
  std::vector<std::pair<size_t, size_t>> e = {{0, 1}, {1, 2}};
  SimpleGraph g = SimpleGraph::FromEdges(4, e);
  EXPECT_EQ(Closeness(g, 0), 4.0 / 9.0);
  EXPECT_EQ(Closeness(g, 3), 0.0);
  SimpleGraph one = SimpleGraph::FromEdges(1, {});
  EXPECT_EQ(Closeness(one, 0), 0.0);
}

TEST(ClosenessTest, MatchesAllPairsOracle) {
  long n = CompareClosenessWithOracle(5, 8, 2000, 13);
  EXPECT_EQ(n, 1 + 2 + 8 + 64 + 1024 + 2000);
}

TEST(ClosenessTest, ParallelMatchesSerial) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    size_t n = 50 + rng() % 150;
    std::vector<std::pair<size_t, size_t>> e;
    for (size_t i = 0; i < n * 2; ++i) e.emplace_back(rng() % n, rng() % n);
    SimpleGraph g = SimpleGraph::FromEdges(n, e);
    EXPECT_EQ(ClosenessAll(g), ClosenessAllSerial(g));
    EXPECT_EQ(ClosenessAll(g), OracleCloseness(n, e));
  }
}

TEST(SimpleGraphTest, DropsDuplicatesAndLoops) {
  std::vector<std::pair<size_t, size_t>> e = {{0, 1}, {1, 0}, {2, 2}, {1, 2}};
  SimpleGraph g = SimpleGraph::FromEdges(3, e);
  EXPECT_EQ(g.EdgeCount(), 2u);
  EXPECT_TRUE(g.HasEdge(1, 0));
  EXPECT_FALSE(g.HasEdge(2, 2));
  EXPECT_FALSE(g.HasEdge(0, 2));
}

Hypergraph Make(std::vector<std::vector<size_t>> edges, size_t n) {
  Hypergraph h;
  for (size_t i = 0; i < n; ++i) {
    h.vertices.push_back({std::string(1, static_cast<char>('a' + i)),
                          EntityKind::kActor});
  }
  for (size_t i = 0; i < edges.size(); ++i) {
    h.edges.push_back({"d", "s" + std::to_string(i), edges[i]});
  }
  return h;
}

TEST(TwoSectionTest, TriangleAndPath) {
  SimpleGraph tri = TwoSection(Make({{0, 1, 2}}, 3));
  EXPECT_EQ(tri.EdgeCount(), 3u);
  SimpleGraph path = TwoSection(Make({{0, 1}, {1, 2}}, 3));
  EXPECT_EQ(path.EdgeCount(), 2u);
  EXPECT_FALSE(path.HasEdge(0, 2));
  EXPECT_EQ(path.names, (std::vector<std::string>{"a", "b", "c"}));
}

TEST(TwoSectionTest, InvariantToOrderAndDuplicates) {
  std::vector<std::vector<size_t>> edges = {{0, 1}, {2, 3, 4}, {1, 4}, {5}};
  SimpleGraph base = TwoSection(Make(edges, 6));
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::vector<size_t>> shuffled = edges;
    shuffled.push_back(edges[rng() % edges.size()]);
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    SimpleGraph g = TwoSection(Make(shuffled, 6));
    EXPECT_EQ(g.adjacency, base.adjacency);
  }
}

TEST(MetricsTableTest, SingleEntityHasZeroCloseness) {
  std::vector<Mention> m = {At("A", "s1", MentionClass::kAttribute)};
  Hypergraph h = BuildHypergraph(m, GraphMode::kActorsOnly);
  std::vector<MetricsRow> rows = MetricsTable(h, m, 1);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].visibility, 6.0);
  EXPECT_EQ(rows[0].closeness, 0.0);
  EXPECT_EQ(MetricsCsv(rows), "entity,kind,visibility,closeness\nA,actor,6.00,0.00\n");
}

TEST(MetricsTableTest, SortedByVisibilityThenClosenessThenName) {
  std::vector<Mention> m = {At("C", "s1", MentionClass::kAttribute),
                            At("B", "s1", MentionClass::kDirectObject),
                            At("A", "s2", MentionClass::kDirectObject),
                            At("B", "s2", MentionClass::kIndirectObject),
                            At("D", "s3", MentionClass::kDirectObject)};
  Hypergraph h = BuildHypergraph(m, GraphMode::kActorsOnly);
  std::vector<MetricsRow> rows = MetricsTable(h, m, 3);
  std::vector<std::string> order;
  for (const MetricsRow &r : rows) order.push_back(r.entity);
  EXPECT_EQ(order, (std::vector<std::string>{"B", "C", "A", "D"}));
  EXPECT_EQ(rows[0].counts, (ClassCounts{0, 0, 0, 1, 1, 0}));
  EXPECT_EQ(rows[0].statements, 3u);
  nlohmann::json j = nlohmann::json::parse(MetricsJson(rows));
  EXPECT_EQ(j["rows"][0]["entity"], "B");
  EXPECT_EQ(j["rows"][0]["visibility"].get<double>(), rows[0].visibility);
}

TEST(RankTest, IdenticalMetricsGiveZeroDeltas) {
  std::vector<MetricsRow> rows(3);
  for (size_t i = 0; i < rows.size(); ++i) {
    rows[i].entity = std::string(1, static_cast<char>('a' + i));
    rows[i].visibility = 1.5;
    rows[i].closeness = 0.5;
  }
  for (const RankRow &r : RankComparison(rows)) {
    EXPECT_EQ(r.visibility_rank, 1);
    EXPECT_EQ(r.delta, 0);
  }
}

TEST(RankTest, ReversedMetricsAreAntisymmetric) {
  std::vector<MetricsRow> rows(3);
  for (size_t i = 0; i < 3; ++i) {
    rows[i].entity = std::string(1, static_cast<char>('a' + i));
    rows[i].visibility = 3.0 - static_cast<double>(i);
    rows[i].closeness = 0.1 * static_cast<double>(i + 1);
  }
  std::vector<RankRow> r = RankComparison(rows);
  EXPECT_EQ(r[0].delta, -2);
  EXPECT_EQ(r[1].delta, 0);
  EXPECT_EQ(r[2].delta, 2);
  EXPECT_EQ(RanksCsv(r),
            "entity,visibility_rank,centrality_rank,delta\na,1,3,-2\nb,2,2,0\n"
            "c,3,1,2\n");
}

TEST(RankTest, TiesShareDenseRank) {
  std::vector<MetricsRow> rows(4);
  double vis[] = {2.0, 1.0, 1.0, 0.5};
  for (size_t i = 0; i < 4; ++i) {
    rows[i].entity = std::string(1, static_cast<char>('a' + i));
    rows[i].visibility = vis[i];
  }
  std::vector<RankRow> r = RankComparison(rows);
  EXPECT_EQ(r[1].visibility_rank, 2);
  EXPECT_EQ(r[2].visibility_rank, 2);
  EXPECT_EQ(r[3].visibility_rank, 3);
}

TEST(OutputsTest, ScatterAndHistogram) {
  std::vector<MetricsRow> rows(2);
  rows[0] = {"A", EntityKind::kActor, 2.0, 0.5, {}, 1};
  rows[1] = {"F", EntityKind::kObject, 1.0, 0.25, {}, 1};
  nlohmann::json s = nlohmann::json::parse(ScatterJson(rows));
  ASSERT_EQ(s["points"].size(), 2u);
  EXPECT_EQ(s["points"][0]["label"], 1);
  EXPECT_TRUE(s["points"][1]["label"].is_null());
  EXPECT_EQ(s["points"][1]["kind"], "object");
  std::map<GraphMode, std::map<size_t, size_t>> hist = {
      {GraphMode::kActorsAndObjects, {{3, 1}}}, {GraphMode::kActorsOnly, {{1, 2}}}};
  EXPECT_EQ(HistogramCsv(hist),
            "mode,size,count\nactors,1,2\nactors-objects,3,1\n");
}

}  // namespace
}  // namespace igpipe
