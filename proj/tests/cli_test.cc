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

// Drives the igpipe binary through a shell and checks exit codes, messages
// and the files it writes.

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <set>

#include "gtest/gtest.h"
#include "igpipe/pipeline.h"
#include "json.hpp"
#include "test_util.h"

namespace igpipe {
namespace {

using testing::DataPath;
using testing::TempDir;

struct Result {
  int status = -1;
  std::string output;  // stdout and stderr interleaved
};

Result RunCli(const std::string &args, const std::string &cwd = "") {
  std::string cmd;
  if (!cwd.empty()) cmd = "cd '" + cwd + "' && ";
  cmd += std::string("'") + IGPIPE_BIN + "' " + args + " 2>&1";
  Result r;
  FILE *p = popen(cmd.c_str(), "r");
  if (p == nullptr) return r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), p)) > 0) r.output.append(buf, n);
  int raw = pclose(p);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string Q(const std::string &path) { return "'" + path + "'"; }

const std::string &Corpus() {
  static const std::string p = DataPath("data/mini_corpus/corpus.conllu");
  return p;
}
const std::string &Lexicon() {
  static const std::string p = DataPath("data/mini_corpus/lexicon.csv");
  return p;
}

std::string Train(const TempDir &dir, const std::string &name = "model.json") {
  Result r = RunCli("classify train --data " +
                 Q(DataPath("data/mini_corpus/train.csv")) + " --k 70 --seed 13" +
                 " --out " + Q(dir / name));
  EXPECT_EQ(r.status, 0) << r.output;
  return dir / name;
}

TEST(CliTest, UnknownFlagExitsTwoWithUsage) {
  Result r = RunCli("tag --bogus 1");
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.output.find("Usage"), std::string::npos) << r.output;
  EXPECT_EQ(RunCli("").status, 2);
  EXPECT_EQ(RunCli("frobnicate").status, 2);
  EXPECT_EQ(RunCli("graph --mode sideways --in x --lexicon y --out z").status, 2);
}

TEST(CliTest, HelpExitsZero) {
  Result r = RunCli("--help");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.output.find("report"), std::string::npos);
  EXPECT_EQ(RunCli("report --help").status, 0);
}

TEST(CliTest, EmptyInputDirectoryFails) {
  TempDir dir;
  std::filesystem::create_directories(dir.path() / "empty");
  Result r = RunCli("report --in " + Q(dir / "empty") + " --type regulative" +
                 " --lexicon " + Q(Lexicon()) + " --out " + Q(dir / "out"));
  EXPECT_NE(r.status, 0);
  EXPECT_NE(r.output.find("no .conllu inputs"), std::string::npos) << r.output;
  EXPECT_NE(r.output.find("ingest"), std::string::npos);
  EXPECT_FALSE(std::filesystem::exists(dir / "out/metrics.csv"));
}

TEST(CliTest, TrainingIsByteReproducible) {
  TempDir dir;
  std::string a = Train(dir, "a.json");
  std::string b = Train(dir, "b.json");
  EXPECT_EQ(ReadFileOrThrow(a), ReadFileOrThrow(b));
}

TEST(CliTest, PredictWritesLabels) {
  TempDir dir;
  std::string model = Train(dir);
  Result r = RunCli("classify predict --model " + Q(model) + " --in " + Q(Corpus()) +
                 " --out " + Q(dir / "labels.csv"));
  ASSERT_EQ(r.status, 0) << r.output;
  std::string labels = ReadFileOrThrow(dir / "labels.csv");
  EXPECT_EQ(labels.rfind("doc_id,statement_id,type,score\n", 0), 0u);
  EXPECT_NE(labels.find("corpus,s1,regulative,"), std::string::npos);
  EXPECT_NE(labels.find("corpus,s6,constitutive,"), std::string::npos);
}

TEST(CliTest, TagGraphAndMetricsStages) {
  TempDir dir;
  std::string model = Train(dir);
  std::string ann = dir / "corpus.igjsonl";
  Result r = RunCli("tag --model " + Q(model) + " --in " + Q(Corpus()) +
                 " --lexicon " + Q(Lexicon()) + " --out " + Q(ann));
  ASSERT_EQ(r.status, 0) << r.output;

  std::set<std::string> vertices[2];
  const char *modes[2] = {"actors", "actors-objects"};
  for (int i = 0; i < 2; ++i) {
    std::string out = dir / modes[i];
    r = RunCli("graph --in " + Q(ann) + " --lexicon " + Q(Lexicon()) + " --mode " +
            modes[i] + " --out " + Q(out));
    ASSERT_EQ(r.status, 0) << r.output;
    nlohmann::json j =
        nlohmann::json::parse(ReadFileOrThrow(out + "/hypergraph.json"));
    for (const auto &v : j["vertices"]) vertices[i].insert(v["name"]);
    EXPECT_TRUE(std::filesystem::exists(out + "/hypergraph.graphml"));
    EXPECT_TRUE(std::filesystem::exists(out + "/hypergraph.dot"));
  }
  EXPECT_LT(vertices[0].size(), vertices[1].size());
  EXPECT_TRUE(std::includes(vertices[1].begin(), vertices[1].end(),
                            vertices[0].begin(), vertices[0].end()));

  r = RunCli("metrics --in " + Q(ann) + " --lexicon " + Q(Lexicon()) + " --out " +
          Q(dir / "m"));
  ASSERT_EQ(r.status, 0) << r.output;
  EXPECT_EQ(ReadFileOrThrow(dir / "m/metrics.csv"),
            ReadFileOrThrow(DataPath("tests/golden/mini_corpus/metrics.csv")));
}

TEST(CliTest, EvalWritesTableToStdout) {
  TempDir dir;
  std::string model = Train(dir);
  std::string ann = dir / "corpus.igjsonl";
  ASSERT_EQ(RunCli("tag --model " + Q(model) + " --in " + Q(Corpus()) +
                " --lexicon " + Q(Lexicon()) + " --out " + Q(ann))
                .status,
            0);
  Result r = RunCli("eval --pred " + Q(ann) + " --gold " + Q(ann));
  ASSERT_EQ(r.status, 0) << r.output;
  EXPECT_EQ(r.output.rfind("layer,component,f1,precision,recall,support,flags\n", 0),
            0u);
  EXPECT_NE(r.output.find("regulative,Attribute,1.0000,1.0000,1.0000,"),
            std::string::npos);
}

TEST(CliTest, ReportTwiceIsIdentical) {
  TempDir dir;
  std::string model = Train(dir);
  for (const char *out : {"r1", "r2"}) {
    Result r = RunCli("report --in " + Q(DataPath("data/mini_corpus")) + " --model " +
                   Q(model) + " --lexicon " + Q(Lexicon()) + " --out " +
                   Q(dir / out));
    ASSERT_EQ(r.status, 0) << r.output;
  }
  size_t files = 0;
  for (const auto &entry : std::filesystem::directory_iterator(dir / "r1")) {
    std::string name = entry.path().filename().string();
    std::string a = ReadFileOrThrow(entry.path().string());
    std::string b = ReadFileOrThrow(dir / ("r2/" + name));
    if (name == "manifest.json") {
      nlohmann::json ja = nlohmann::json::parse(a), jb = nlohmann::json::parse(b);
      ja.erase("created_at");
      jb.erase("created_at");
      EXPECT_EQ(ja, jb);
    } else {
      EXPECT_EQ(a, b) << name;
    }
    ++files;
  }
  EXPECT_EQ(files, 10u);
}

TEST(CliTest, ConfigFileSuppliesDefaults) {
  TempDir dir;
  std::ofstream(dir / "igpipe.ini") << "[tag]\ntype=constitutive\n";
  Result r = RunCli("tag --in " + Q(Corpus()) + " --out out.igjsonl", dir.path().string());
  ASSERT_EQ(r.status, 0) << r.output;
  std::string ann = ReadFileOrThrow(dir / "out.igjsonl");
  EXPECT_EQ(ann.find("\"type\":\"regulative\""), std::string::npos);
  EXPECT_NE(ann.find("\"type\":\"constitutive\""), std::string::npos);
}

TEST(CliTest, TypeOverrideWithoutModel) {
  TempDir dir;
  Result r = RunCli("report --in " + Q(Corpus()) + " --type constitutive --lexicon " +
                 Q(Lexicon()) + " --out " + Q(dir / "out"));
  ASSERT_EQ(r.status, 0) << r.output;
  EXPECT_EQ(ReadFileOrThrow(dir / "out/annotations.igjsonl").find("regulative"),
            std::string::npos);
  Result missing = RunCli("tag --in " + Q(Corpus()) + " --out " + Q(dir / "x"));
  EXPECT_EQ(missing.status, 1);
  EXPECT_NE(missing.output.find("classify"), std::string::npos);
}

}  // namespace
}  // namespace igpipe
