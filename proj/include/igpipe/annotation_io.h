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

// JSON-lines serialization of annotated statements, one object per line:
//
//   {"doc_id": ..., "statement_id": ..., "type": "regulative",
//    "tokens": [{"id": 1, "form": ..., "tag": ...}, ...],
//    "rule_trace": [{"rule": "R3", "tokens": [5, 6, 7]}, ...]}
//
// Tokens also carry lemma, upos, head and deprel so later stages can run from
// this file alone. Only id, form and tag are required when reading, which is
// enough for gold files used by evaluation.

#ifndef IGPIPE_ANNOTATION_IO_H_
#define IGPIPE_ANNOTATION_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "igpipe/tagger.h"

namespace igpipe {

std::string ToJsonLine(const AnnotatedStatement &statement);

// Throws ParseError naming the line for malformed records.
std::vector<AnnotatedStatement> ParseAnnotationJsonl(std::string_view text);
std::vector<AnnotatedStatement> ReadAnnotationFile(const std::string &path);

}  // namespace igpipe

#endif  // IGPIPE_ANNOTATION_IO_H_
