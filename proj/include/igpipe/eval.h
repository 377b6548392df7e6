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

// Token-level scoring of predicted IG tags against gold annotations.

#ifndef IGPIPE_EVAL_H_
#define IGPIPE_EVAL_H_

#include <span>
#include <string>
#include <vector>

#include "igpipe/ig_types.h"
#include "igpipe/tagger.h"

namespace igpipe {

struct ComponentScore {
  StatementType layer = StatementType::kRegulative;
  std::string component;  // Attribute, Object, ..., Entity, Property, ...
  IGTag tag = IGTag::kUntagged;  // collapsed tag scored by this row
  size_t predicted = 0;
  size_t correct = 0;
  size_t support = 0;  // gold tokens with this tag
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  // Nothing predicted; precision is reported as 0.
  bool precision_undefined = false;
};

struct LayerScore {
  // Unweighted mean over the components present in gold.
  double macro_precision = 0.0;
  double macro_recall = 0.0;
  double macro_f1 = 0.0;
  // Pooled counts over all components of the layer.
  double micro_precision = 0.0;
  double micro_recall = 0.0;
  double micro_f1 = 0.0;
  size_t statements = 0;
  size_t support = 0;
};

struct EvalReport {
  std::vector<ComponentScore> components;  // regulative rows, then constitutive
  LayerScore regulative;
  LayerScore constitutive;

  const ComponentScore &Find(StatementType layer,
                             std::string_view component) const;
  const LayerScore &Layer(StatementType layer) const {
    return layer == StatementType::kRegulative ? regulative : constitutive;
  }
  // layer,component,f1,precision,recall,support,flags
  std::string ToCsv() const;
};

// Statements align by (doc_id, statement_id) and must have equal token counts;
// the layer is the gold statement type. Both sides are collapsed before
// counting and Untagged is never scored. Throws ValidationError naming the
// first misaligned statement.
EvalReport EvaluateTagger(std::span<const AnnotatedStatement> predicted,
                          std::span<const AnnotatedStatement> gold);

}  // namespace igpipe

#endif  // IGPIPE_EVAL_H_
