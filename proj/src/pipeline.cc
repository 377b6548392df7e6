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

#include <chrono>
#include <cstdio>
#include <ctime>
#include <exception>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "igpipe/annotation_io.h"
#include "igpipe/graph_export.h"
#include "igpipe/metrics.h"
#include "json.hpp"

namespace igpipe {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

std::string UtcTimestamp() {
  std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

std::string Fnv1aHex(std::string_view data) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string ReadFileOrThrow(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<Document> LoadDocuments(const std::vector<std::string> &inputs) {
  std::vector<std::string> files;
  try {
    files = CollectConlluInputs(inputs);
  } catch (const std::exception &e) {
    throw PipelineError("ingest", e.what());
  }
  if (files.empty()) throw PipelineError("ingest", "no .conllu inputs");

  const long n = static_cast<long>(files.size());
  std::vector<Document> docs(n);
  std::vector<std::string> errors(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) {
    try {
      docs[i] = ReadConlluFile(files[i]);
    } catch (const std::exception &e) {
      errors[i] = files[i] + ": " + e.what();
    }
  }
  for (const std::string &e : errors) {
    if (!e.empty()) throw PipelineError("ingest", e);
  }
  return docs;
}

std::vector<AnnotatedStatement> AnnotateDocuments(
    const std::vector<Document> &documents, const ClassifierModel *model,
    std::optional<StatementType> forced, const EntityLexicon *lexicon) {
  std::vector<const Statement *> statements;
  for (const Document &d : documents) {
    for (const Statement &s : d.statements) statements.push_back(&s);
  }
  if (!forced && model == nullptr) {
    throw PipelineError("classify", "a model is required unless --type is set");
  }

  std::vector<StatementType> types;
  std::vector<std::optional<double>> scores;
  for (const Statement *s : statements) {
    if (forced) {
      types.push_back(*forced);
      scores.emplace_back();
    } else {
      Prediction p = model->Predict(*s);
      types.push_back(p.type);
      scores.emplace_back(p.score);
    }
  }

  std::vector<AnnotatedStatement> out;
  try {
    out = TagCorpus(statements, types, lexicon);
  } catch (const std::exception &e) {
    throw PipelineError("tag", e.what());
  }
  for (size_t i = 0; i < out.size(); ++i) out[i].type_score = scores[i];
  return out;
}

std::string AnnotationsJsonl(const std::vector<AnnotatedStatement> &annotated) {
  std::string out;
  for (const AnnotatedStatement &a : annotated) out += ToJsonLine(a);
  return out;
}

Bundle GraphBundle(const std::vector<AnnotatedStatement> &annotated,
                   const EntityLexicon &lexicon, GraphMode mode) {
  std::vector<Mention> mentions = ExtractCorpusMentions(annotated, lexicon);
  Hypergraph h = BuildHypergraph(mentions, mode, &lexicon);
  Bundle b;
  b["hypergraph.graphml"] = HypergraphToGraphML(h);
  b["hypergraph.dot"] = TwoSectionToDot(TwoSection(h));
  b["hypergraph.json"] = HypergraphToJson(h);
  return b;
}

Bundle MetricsBundle(const std::vector<AnnotatedStatement> &annotated,
                     const EntityLexicon &lexicon, GraphMode mode) {
  if (annotated.empty()) {
    throw PipelineError("metrics", "no statements to measure");
  }
  std::vector<Mention> mentions = ExtractCorpusMentions(annotated, lexicon);
  Hypergraph h = BuildHypergraph(mentions, mode, &lexicon);
  std::vector<MetricsRow> rows = MetricsTable(h, mentions, annotated.size());
  std::map<GraphMode, std::map<size_t, size_t>> histograms;
  for (GraphMode m : {GraphMode::kActorsOnly, GraphMode::kActorsAndObjects}) {
    histograms[m] = EdgeSizeHistogram(BuildHypergraph(mentions, m));
  }
  Bundle b;
  b["metrics.csv"] = MetricsCsv(rows);
  b["metrics.json"] = MetricsJson(rows);
  b["ranks.csv"] = RanksCsv(RankComparison(rows));
  b["scatter.json"] = ScatterJson(rows);
  b["histogram.csv"] = HistogramCsv(histograms);
  return b;
}

Bundle RunPipeline(const PipelineConfig &config) {
  json cfg;
  cfg["inputs"] = config.inputs;
  cfg["model"] = config.forced_type ? "" : config.model_path;
  cfg["lexicon"] = config.lexicon_path;
  cfg["mode"] = GraphModeName(config.mode);
  cfg["type"] = config.forced_type
                    ? std::string(StatementTypeName(*config.forced_type))
                    : std::string("classifier");
  cfg["seed"] = config.seed;

  std::vector<Document> docs = LoadDocuments(config.inputs);

  std::optional<ClassifierModel> model;
  if (!config.forced_type) {
    try {
      model = ClassifierModel::ReadFile(config.model_path);
    } catch (const std::exception &e) {
      throw PipelineError("classify", e.what());
    }
  }
  EntityLexicon lexicon;
  try {
    lexicon = EntityLexicon::ReadFile(config.lexicon_path);
  } catch (const std::exception &e) {
    throw PipelineError("lexicon", e.what());
  }

  std::vector<AnnotatedStatement> annotated = AnnotateDocuments(
      docs, model ? &*model : nullptr, config.forced_type, &lexicon);

  Bundle bundle;
  bundle["annotations.igjsonl"] = AnnotationsJsonl(annotated);
  try {
    bundle.merge(GraphBundle(annotated, lexicon, config.mode));
  } catch (const PipelineError &) {
    throw;
  } catch (const std::exception &e) {
    throw PipelineError("graph", e.what());
  }
  try {
    bundle.merge(MetricsBundle(annotated, lexicon, config.mode));
  } catch (const PipelineError &) {
    throw;
  } catch (const std::exception &e) {
    throw PipelineError("metrics", e.what());
  }

  json inputs = json::array();
  for (const Document &d : docs) {
    const std::string &path = d.metadata.at("source");
    inputs.push_back({{"path", path},
                      {"fnv1a64", Fnv1aHex(ReadFileOrThrow(path))},
                      {"statements", d.statements.size()}});
  }
  json warnings = json::array();
  for (const Document &d : docs) {
    for (const std::string &w : d.Warnings()) warnings.push_back(w);
  }
  json outputs = json::array();
  for (const auto &[name, content] : bundle) {
    outputs.push_back({{"name", name},
                       {"bytes", content.size()},
                       {"fnv1a64", Fnv1aHex(content)}});
  }
  json manifest;
  manifest["tool"] = "igpipe";
  manifest["version"] = kVersion;
  manifest["created_at"] = UtcTimestamp();
  manifest["seed"] = config.seed;
  manifest["config"] = cfg;
  manifest["config_hash"] = Fnv1aHex(cfg.dump());
  if (model) {
    manifest["model"] = {{"path", config.model_path},
                         {"fnv1a64", Fnv1aHex(model->ToJson())},
                         {"training_seed", model->training_seed}};
  }
  manifest["inputs"] = inputs;
  manifest["statements"] = annotated.size();
  manifest["warnings"] = warnings;
  manifest["outputs"] = outputs;
  bundle["manifest.json"] = manifest.dump(2) + "\n";
  return bundle;
}

void WriteBundle(const std::string &dir, const Bundle &bundle) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw PipelineError("write", "cannot create " + dir + ": " + ec.message());
  const fs::path staging = fs::path(dir) / ".igpipe-staging";
  fs::remove_all(staging, ec);
  std::vector<fs::path> moved;
  auto roll_back = [&]() {
    for (const fs::path &p : moved) fs::remove(p, ec);
    fs::remove_all(staging, ec);
  };
  try {
    fs::create_directories(staging);
    for (const auto &[name, content] : bundle) {
      std::ofstream out(staging / name, std::ios::binary);
      out << content;
      if (!out) throw PipelineError("write", "cannot write " + name);
    }
    for (const auto &[name, content] : bundle) {
      fs::rename(staging / name, fs::path(dir) / name);
      moved.push_back(fs::path(dir) / name);
    }
    fs::remove_all(staging);
  } catch (const PipelineError &) {
    roll_back();
    throw;
  } catch (const std::exception &e) {
    roll_back();
    throw PipelineError("write", e.what());
  }
}

}  // namespace igpipe
