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

// igpipe command-line tool.
//
//   igpipe classify train   --data train.csv --k 70 --seed 13 --out model.json
//   igpipe classify predict --model model.json --in doc.conllu --out labels.csv
//   igpipe tag     --model model.json --in doc.conllu --out doc.igjsonl
//   igpipe eval    --pred p.igjsonl --gold g.igjsonl --out report.csv
//   igpipe graph   --in doc.igjsonl --lexicon lexicon.csv --mode actors --out dir
//   igpipe metrics --in doc.igjsonl --lexicon lexicon.csv --out dir
//   igpipe report  --in corpus/ --model model.json --lexicon lexicon.csv
//                  --out dir
//
// Defaults for any flag may be put in igpipe.ini in the working directory,
// one section per subcommand. IGPIPE_LOG_LEVEL sets the log level.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "igpipe/annotation_io.h"
#include "igpipe/classifier.h"
#include "igpipe/csv.h"
#include "igpipe/eval.h"
#include "igpipe/pipeline.h"
#include "spdlog/sinks/stdout_sinks.h"
#include "spdlog/spdlog.h"

namespace {

using namespace igpipe;

// Writes |content| to |path| via a temporary file, or to stdout when empty.
void WriteOutput(const std::string &path, const std::string &content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::filesystem::path target(path);
  if (target.has_parent_path()) {
    std::filesystem::create_directories(target.parent_path());
  }
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    out << content;
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw PipelineError("write", "cannot write " + path);
    }
  }
  std::filesystem::rename(tmp, target);
}

std::optional<StatementType> TypeFlag(const std::string &value) {
  if (value.empty()) return std::nullopt;
  return ParseStatementType(value);
}

GraphMode ModeFlag(const std::string &value) {
  return *ParseGraphMode(value);
}

void SetUpLogging() {
  auto logger = spdlog::stderr_logger_st("igpipe");
  logger->set_pattern("igpipe %l: %v");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  if (const char *level = std::getenv("IGPIPE_LOG_LEVEL")) {
    spdlog::set_level(spdlog::level::from_str(level));
  }
}

struct Flags {
  uint64_t seed = 13;
  std::string out;
  std::string data;
  size_t k = 70;
  double l2 = TrainingOptions().l2;
  std::string model;
  std::vector<std::string> inputs;
  std::string type;
  std::string lexicon;
  std::string pred;
  std::string gold;
  std::string mode = "actors-objects";
};

void AddCommon(CLI::App *cmd, Flags &f, bool out_required) {
  cmd->add_option("--seed", f.seed, "Seed recorded with the outputs")
      ->capture_default_str();
  auto *out = cmd->add_option("--out", f.out, "Output path");
  if (out_required) out->required();
}

CLI::Validator TypeValidator() {
  return CLI::IsMember({"regulative", "constitutive"});
}

CLI::Validator ModeValidator() {
  return CLI::IsMember({"actors", "actors-objects"});
}

int RunTrain(const Flags &f) {
  std::vector<TrainingExample> corpus =
      ReadTrainingCsv(ReadFileOrThrow(f.data));
  TrainingOptions options;
  options.k = f.k;
  options.seed = f.seed;
  options.l2 = f.l2;
  ClassifierModel model = Fit(corpus, options);
  ClassificationReport r = EvaluateClassifier(model, corpus);
  spdlog::info("trained on {} statements, {} iterations, training macro F1 {:.4f}",
               corpus.size(), model.iterations, r.macro.f1);
  WriteOutput(f.out, model.ToJson());
  return 0;
}

int RunPredict(const Flags &f) {
  ClassifierModel model = ClassifierModel::ReadFile(f.model);
  std::string out = CsvLine({"doc_id", "statement_id", "type", "score"});
  for (const Document &d : LoadDocuments(f.inputs)) {
    for (const Statement &s : d.statements) {
      Prediction p = model.Predict(s);
      char score[32];
      std::snprintf(score, sizeof(score), "%.6f", p.score);
      out += CsvLine({s.doc_id(), s.statement_id(),
                      std::string(StatementTypeName(p.type)), score});
    }
  }
  WriteOutput(f.out, out);
  return 0;
}

int RunTag(const Flags &f) {
  std::optional<StatementType> forced = TypeFlag(f.type);
  std::optional<ClassifierModel> model;
  if (!forced) {
    if (f.model.empty()) {
      throw PipelineError("classify", "--model is required unless --type is set");
    }
    model = ClassifierModel::ReadFile(f.model);
  }
  std::optional<EntityLexicon> lexicon;
  if (!f.lexicon.empty()) lexicon = EntityLexicon::ReadFile(f.lexicon);
  std::vector<Document> docs = LoadDocuments(f.inputs);
  for (const Document &d : docs) {
    for (const std::string &w : d.Warnings()) spdlog::warn("{}", w);
  }
  std::vector<AnnotatedStatement> annotated = AnnotateDocuments(
      docs, model ? &*model : nullptr, forced, lexicon ? &*lexicon : nullptr);
  WriteOutput(f.out, AnnotationsJsonl(annotated));
  return 0;
}

int RunEval(const Flags &f) {
  std::vector<AnnotatedStatement> pred = ReadAnnotationFile(f.pred);
  std::vector<AnnotatedStatement> gold = ReadAnnotationFile(f.gold);
  WriteOutput(f.out, EvaluateTagger(pred, gold).ToCsv());
  return 0;
}

int RunGraph(const Flags &f, bool metrics) {
  std::vector<AnnotatedStatement> annotated;
  for (const std::string &path : f.inputs) {
    std::vector<AnnotatedStatement> part = ReadAnnotationFile(path);
    annotated.insert(annotated.end(), part.begin(), part.end());
  }
  EntityLexicon lexicon = EntityLexicon::ReadFile(f.lexicon);
  GraphMode mode = ModeFlag(f.mode);
  WriteBundle(f.out, metrics ? MetricsBundle(annotated, lexicon, mode)
                             : GraphBundle(annotated, lexicon, mode));
  return 0;
}

int RunReport(const Flags &f) {
  PipelineConfig config;
  config.inputs = f.inputs;
  config.model_path = f.model;
  config.lexicon_path = f.lexicon;
  config.mode = ModeFlag(f.mode);
  config.output_dir = f.out;
  config.seed = f.seed;
  config.forced_type = TypeFlag(f.type);
  if (!config.forced_type && config.model_path.empty()) {
    throw PipelineError("classify", "--model is required unless --type is set");
  }
  Bundle bundle = RunPipeline(config);
  WriteBundle(config.output_dir, bundle);
  spdlog::info("wrote {} files to {}", bundle.size(), config.output_dir);
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  SetUpLogging();

  CLI::App app{"Institutional Grammar tagging and actor-network analysis"};
  app.set_config("--config", "igpipe.ini", "Defaults file", false);
  app.require_subcommand(1);
  Flags f;

  CLI::App *classify = app.add_subcommand("classify", "Statement-type classifier");
  classify->require_subcommand(1);
  CLI::App *train = classify->add_subcommand("train", "Train a model from CSV");
  AddCommon(train, f, true);
  train->add_option("--data", f.data, "CSV: statement_id,text,label")
      ->required()
      ->check(CLI::ExistingFile);
  train->add_option("--k", f.k, "Number of n-gram features")
      ->capture_default_str();
  train->add_option("--l2", f.l2, "L2 regularization strength")
      ->capture_default_str();

  CLI::App *predict = classify->add_subcommand("predict", "Label statements");
  AddCommon(predict, f, false);
  predict->add_option("--model", f.model)->required()->check(CLI::ExistingFile);
  predict->add_option("--in", f.inputs, ".conllu files or directories")
      ->required();

  CLI::App *tag = app.add_subcommand("tag", "Tag statements with IG components");
  AddCommon(tag, f, false);
  tag->add_option("--model", f.model)->check(CLI::ExistingFile);
  tag->add_option("--in", f.inputs, ".conllu files or directories")->required();
  tag->add_option("--type", f.type, "Force every statement to this type")
      ->check(TypeValidator());
  tag->add_option("--lexicon", f.lexicon, "Entity lexicon CSV")
      ->check(CLI::ExistingFile);

  CLI::App *eval = app.add_subcommand("eval", "Score tags against gold");
  AddCommon(eval, f, false);
  eval->add_option("--pred", f.pred)->required()->check(CLI::ExistingFile);
  eval->add_option("--gold", f.gold)->required()->check(CLI::ExistingFile);

  CLI::App *graph = app.add_subcommand("graph", "Build and export the hypergraph");
  CLI::App *metrics =
      app.add_subcommand("metrics", "Visibility and centrality tables");
  for (CLI::App *cmd : {graph, metrics}) {
    AddCommon(cmd, f, true);
    cmd->add_option("--in", f.inputs, ".igjsonl annotation files")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--lexicon", f.lexicon)->required()->check(CLI::ExistingFile);
    cmd->add_option("--mode", f.mode)->check(ModeValidator())
        ->capture_default_str();
  }

  CLI::App *report = app.add_subcommand("report", "Run the whole pipeline");
  AddCommon(report, f, true);
  report->add_option("--in", f.inputs, ".conllu files or directories")
      ->required();
  report->add_option("--model", f.model)->check(CLI::ExistingFile);
  report->add_option("--lexicon", f.lexicon)->required()->check(CLI::ExistingFile);
  report->add_option("--mode", f.mode)->check(ModeValidator())
      ->capture_default_str();
  report->add_option("--type", f.type, "Skip classification; use this type")
      ->check(TypeValidator());

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "igpipe: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (train->parsed()) return RunTrain(f);
    if (predict->parsed()) return RunPredict(f);
    if (tag->parsed()) return RunTag(f);
    if (eval->parsed()) return RunEval(f);
    if (graph->parsed()) return RunGraph(f, false);
    if (metrics->parsed()) return RunGraph(f, true);
    if (report->parsed()) return RunReport(f);
  } catch (const std::exception &e) {
    std::cerr << "igpipe: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
