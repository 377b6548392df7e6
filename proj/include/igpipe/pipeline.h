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

// End-to-end pipeline: CoNLL-U documents -> statement types -> IG tags ->
// mentions -> hypergraph -> visibility/centrality report bundle.

#ifndef IGPIPE_PIPELINE_H_
#define IGPIPE_PIPELINE_H_

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "igpipe/classifier.h"
#include "igpipe/conllu.h"
#include "igpipe/hypergraph.h"
#include "igpipe/lexicon.h"
#include "igpipe/tagger.h"

namespace igpipe {

inline constexpr std::string_view kVersion = "0.1.0";

// Failure of one pipeline stage; what() names the stage.
class PipelineError : public std::runtime_error {
 public:
  PipelineError(std::string stage, const std::string &message)
      : std::runtime_error(stage + ": " + message), stage_(std::move(stage)) {}
  const std::string &stage() const { return stage_; }

 private:
  std::string stage_;
};

struct PipelineConfig {
  std::vector<std::string> inputs;  // .conllu files or directories
  std::string model_path;           // unused when forced_type is set
  std::string lexicon_path;
  GraphMode mode = GraphMode::kActorsAndObjects;
  std::string output_dir;
  uint64_t seed = 13;
  std::optional<StatementType> forced_type;
};

// File name -> contents. Ordered, so iteration is deterministic.
using Bundle = std::map<std::string, std::string>;

// Parses every input; documents are parsed concurrently, output keeps input
// order. Throws PipelineError("ingest", ...) when nothing is found.
std::vector<Document> LoadDocuments(const std::vector<std::string> &inputs);

// Types every statement with |model|, or with |forced| when given.
std::vector<AnnotatedStatement> AnnotateDocuments(
    const std::vector<Document> &documents, const ClassifierModel *model,
    std::optional<StatementType> forced, const EntityLexicon *lexicon);

std::string AnnotationsJsonl(const std::vector<AnnotatedStatement> &annotated);

// Hypergraph files for |mode|: hypergraph.graphml, hypergraph.dot,
// hypergraph.json.
Bundle GraphBundle(const std::vector<AnnotatedStatement> &annotated,
                   const EntityLexicon &lexicon, GraphMode mode);

// Metrics files: metrics.csv, metrics.json, ranks.csv, scatter.json,
// histogram.csv (both modes). N is the number of annotated statements.
Bundle MetricsBundle(const std::vector<AnnotatedStatement> &annotated,
                     const EntityLexicon &lexicon, GraphMode mode);

// Everything above plus annotations.igjsonl and manifest.json.
Bundle RunPipeline(const PipelineConfig &config);

// Writes |bundle| into |dir| (created if absent). Files are staged first and
// moved into place only when all writes succeed.
void WriteBundle(const std::string &dir, const Bundle &bundle);

// FNV-1a 64-bit, hex encoded.
std::string Fnv1aHex(std::string_view data);

std::string ReadFileOrThrow(const std::string &path);

}  // namespace igpipe

#endif  // IGPIPE_PIPELINE_H_
