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

#include "igpipe/pipeline.h"

#include <fstream>

#include "gtest/gtest.h"
#include "igpipe/annotation_io.h"
#include "json.hpp"
#include "test_util.h"

namespace igpipe {
namespace {

using testing::DataPath;
using testing::TempDir;

std::string TrainModel(const TempDir &dir) {
  ClassifierModel m = Fit(
      ReadTrainingCsv(ReadFileOrThrow(DataPath("data/mini_corpus/train.csv"))),
      {});
  std::string path = dir / "model.json";
  std::ofstream(path) << m.ToJson();
  return path;
}

PipelineConfig MiniConfig(const std::string &model) {
  PipelineConfig c;
  c.inputs = {DataPath("data/mini_corpus")};
  c.model_path = model;
  c.lexicon_path = DataPath("data/mini_corpus/lexicon.csv");
  return c;
}

// Manifest without its timestamp.
std::string StableManifest(const std::string &manifest) {
  nlohmann::json j = nlohmann::json::parse(manifest);
  j.erase("created_at");
  return j.dump();
}

TEST(PipelineTest, MiniCorpusMatchesGoldenFiles) {
  TempDir dir;
  Bundle b = RunPipeline(MiniConfig(TrainModel(dir)));
  for (const char *name : {"metrics.csv", "ranks.csv", "histogram.csv"}) {
    EXPECT_EQ(b.at(name),
              ReadFileOrThrow(DataPath(std::string("tests/golden/mini_corpus/") +
                                       name)))
        << name;
  }
  for (const char *name :
       {"annotations.igjsonl", "hypergraph.graphml", "hypergraph.dot",
        "hypergraph.json", "metrics.json", "scatter.json", "manifest.json"}) {
    EXPECT_TRUE(b.count(name)) << name;
  }
}

TEST(PipelineTest, RunsAreByteIdenticalApartFromTimestamp) {
  TempDir dir;
  PipelineConfig c = MiniConfig(TrainModel(dir));
  Bundle a = RunPipeline(c);
  Bundle b = RunPipeline(c);
  ASSERT_EQ(a.size(), b.size());
  for (const auto &[name, content] : a) {
    if (name == "manifest.json") {
      EXPECT_EQ(StableManifest(content), StableManifest(b.at(name)));
    } else {
      EXPECT_EQ(content, b.at(name)) << name;
    }
  }
  nlohmann::json m = nlohmann::json::parse(a.at("manifest.json"));
  EXPECT_EQ(m["version"], kVersion);
  EXPECT_EQ(m["statements"], 6);
  EXPECT_EQ(m["outputs"].size(), a.size() - 1);
  EXPECT_EQ(m["seed"], 13);
}

// Feeding the tag output into the graph and metrics stages reproduces the
// end-to-end bundle.
TEST(PipelineTest, StagesComposeToReport) {
  TempDir dir;
  Bundle full = RunPipeline(MiniConfig(TrainModel(dir)));
  std::vector<AnnotatedStatement> annotated =
      ParseAnnotationJsonl(full.at("annotations.igjsonl"));
  EntityLexicon lex = testing::MiniLexicon();
  for (const auto &[name, content] :
       GraphBundle(annotated, lex, GraphMode::kActorsAndObjects)) {
    EXPECT_EQ(content, full.at(name)) << name;
  }
  for (const auto &[name, content] :
       MetricsBundle(annotated, lex, GraphMode::kActorsAndObjects)) {
    EXPECT_EQ(content, full.at(name)) << name;
  }
}

TEST(PipelineTest, ForcedTypeSkipsClassifier) {
  PipelineConfig c = MiniConfig("");
  c.forced_type = StatementType::kConstitutive;
  Bundle b = RunPipeline(c);
  for (const AnnotatedStatement &a :
       ParseAnnotationJsonl(b.at("annotations.igjsonl"))) {
    EXPECT_EQ(a.type, StatementType::kConstitutive);
    EXPECT_FALSE(a.type_score);
  }
  nlohmann::json m = nlohmann::json::parse(b.at("manifest.json"));
  EXPECT_FALSE(m.contains("model"));
  EXPECT_EQ(m["config"]["type"], "constitutive");
}

TEST(PipelineTest, EmptyInputDirectory) {
  TempDir dir;
  PipelineConfig c = MiniConfig("");
  c.inputs = {dir.path().string()};
  c.forced_type = StatementType::kRegulative;
  try {
    RunPipeline(c);
    FAIL() << "expected PipelineError";
  } catch (const PipelineError &e) {
    EXPECT_EQ(e.stage(), "ingest");
    EXPECT_NE(std::string(e.what()).find("no .conllu inputs"), std::string::npos);
  }
}

TEST(PipelineTest, MalformedInputNamesFileAndLine) {
  TempDir dir;
  std::ofstream(dir / "bad.conllu") << "1\tGo\tgo\tVERB\t_\t_\t1\troot\t_\t_\n\n";
  PipelineConfig c = MiniConfig("");
  c.inputs = {dir.path().string()};
  c.forced_type = StatementType::kRegulative;
  try {
    RunPipeline(c);
    FAIL() << "expected PipelineError";
  } catch (const PipelineError &e) {
    EXPECT_EQ(e.stage(), "ingest");
    EXPECT_NE(std::string(e.what()).find("bad.conllu"), std::string::npos);
  }
}

TEST(PipelineTest, MissingModelIsClassifyStageError) {
  PipelineConfig c = MiniConfig("/nonexistent/model.json");
  try {
    RunPipeline(c);
    FAIL() << "expected PipelineError";
  } catch (const PipelineError &e) {
    EXPECT_EQ(e.stage(), "classify");
  }
}

TEST(WriteBundleTest, WritesAllFiles) {
  TempDir dir;
  std::string out = dir / "nested/out";
  WriteBundle(out, {{"a.txt", "alpha"}, {"b.txt", "beta"}});
  EXPECT_EQ(ReadFileOrThrow(out + "/a.txt"), "alpha");
  EXPECT_EQ(ReadFileOrThrow(out + "/b.txt"), "beta");
  EXPECT_FALSE(std::filesystem::exists(out + "/.igpipe-staging"));
}

TEST(WriteBundleTest, FailureRemovesPartialOutputs) {
  TempDir dir;
  // b.txt cannot replace a non-empty directory, so the second move fails.
  std::filesystem::create_directories(dir.path() / "b.txt" / "keep");
  try {
    WriteBundle(dir.path().string(), {{"a.txt", "alpha"}, {"b.txt", "beta"}});
    FAIL() << "expected PipelineError";
  } catch (const PipelineError &e) {
    EXPECT_EQ(e.stage(), "write");
  }
  EXPECT_FALSE(std::filesystem::exists(dir / "a.txt"));
  EXPECT_FALSE(std::filesystem::exists(dir / ".igpipe-staging"));
}

TEST(HashTest, Fnv1aKnownValues) {
  EXPECT_EQ(Fnv1aHex(""), "cbf29ce484222325");
  EXPECT_EQ(Fnv1aHex("a"), "af63dc4c8601ec8c");
}

}  // namespace
}  // namespace igpipe
