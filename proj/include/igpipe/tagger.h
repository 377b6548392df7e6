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

// Rule engine assigning Institutional Grammar component tags to the tokens of
// a dependency-parsed statement.
//
// Constitutive statements follow the rule list below, in order:
//
//   C1a  root VERB -> ConstitutiveFunction, root ADJ -> ConstitutingProperties
//   C1b  root child aux:pass or cop -> ConstitutiveFunction
//   C1c  root child nsubj, nsubj:pass or expl -> ConstitutedEntity
//   C1d  entity child det, compound or mark, with descendants ->
//        ConstitutedEntity
//   C1e  root child obl, advmod or xcomp, with descendants -> Context
//   C2   root child aux with a modal lemma -> Modal
//
// Regulative statements use the structural mirror of that list:
//
//   R1   root VERB -> Aim
//   R2   root child aux with a modal lemma -> Deontic
//   R3   root child nsubj phrase -> Attribute / AttributeProp
//   R4   root child obj phrase -> DirectObject / DirectObjectProp
//   R5   root child iobj phrase, or obl phrase with case "to" whose head is
//        part of a lexicon actor mention -> IndirectObject /
//        IndirectObjectProp
//   R6   remaining root child obl, advmod, xcomp or advcl, with descendants
//        -> Context
//
// In a nominal phrase the head and its det, compound, mark, amod, nummod,
// flat, fixed, conj and cc dependents (with descendants) take the component
// tag; other dependents except case and punct take the property tag.
//
// Relation labels match on their universal part, so obl:tmod counts as obl.
// A token already tagged is never retagged.

#ifndef IGPIPE_TAGGER_H_
#define IGPIPE_TAGGER_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "igpipe/conllu.h"
#include "igpipe/ig_types.h"
#include "igpipe/lexicon.h"

namespace igpipe {

struct RuleFiring {
  std::string rule_id;
  std::vector<int> token_ids;
  // "AC" or "EC" for context firings, empty otherwise.
  std::string context_kind;
};

struct AnnotatedStatement {
  std::string doc_id;
  std::string statement_id;
  StatementType type = StatementType::kRegulative;
  std::vector<Token> tokens;
  std::vector<IGTag> tags;  // parallel to tokens
  std::vector<RuleFiring> rule_trace;
  std::vector<std::string> diagnostics;
  // Set when the root is not of the category the first rule requires.
  bool precondition_unmet = false;
  // Classifier decision value when the type was predicted, not forced.
  std::optional<double> type_score;

  size_t size() const { return tokens.size(); }
  IGTag tag(int token_id) const { return tags[token_id - 1]; }
};

// Closed list of modal and deontic operator lemmas.
bool IsModalLemma(std::string_view lemma);

AnnotatedStatement TagConstitutive(const Statement &statement);

// |lexicon| may be null, in which case obliques are never indirect objects.
AnnotatedStatement TagRegulative(const Statement &statement,
                                 const EntityLexicon *lexicon = nullptr);

AnnotatedStatement TagStatement(const Statement &statement, StatementType type,
                                const EntityLexicon *lexicon = nullptr);

std::vector<IGTag> CollapseTagsForEval(std::span<const IGTag> tags);

// Tags statements[i] as types[i]. Output order follows the input. The
// parallel version distributes statements over OpenMP threads.
std::vector<AnnotatedStatement> TagCorpus(
    std::span<const Statement *const> statements,
    std::span<const StatementType> types, const EntityLexicon *lexicon);
std::vector<AnnotatedStatement> TagCorpusSerial(
    std::span<const Statement *const> statements,
    std::span<const StatementType> types, const EntityLexicon *lexicon);

}  // namespace igpipe

#endif  // IGPIPE_TAGGER_H_
