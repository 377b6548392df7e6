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

#include "igpipe/tagger.h"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace igpipe {
namespace {

constexpr std::array<std::string_view, 9> kModalLemmas = {
    "must", "should", "may", "might", "can", "could", "need", "ought", "shall"};

std::string_view BaseRelation(std::string_view deprel) {
  return deprel.substr(0, deprel.find(':'));
}

bool RelationIn(std::string_view deprel,
                std::initializer_list<std::string_view> bases) {
  std::string_view base = BaseRelation(deprel);
  return std::find(bases.begin(), bases.end(), base) != bases.end();
}

class Tagging {
 public:
  Tagging(const Statement &statement, StatementType type)
      : statement_(statement) {
    out_.doc_id = statement.doc_id();
    out_.statement_id = statement.statement_id();
    out_.type = type;
    out_.tokens.assign(statement.tokens().begin(), statement.tokens().end());
    out_.tags.assign(statement.size(), IGTag::kUntagged);
  }

  const Statement &statement() const { return statement_; }
  const Token &token(int id) const { return statement_.token(id); }
  bool tagged(int id) const { return out_.tags[id - 1] != IGTag::kUntagged; }

  // Tags the untagged tokens among |ids| and records one firing for them.
  void Assign(const std::vector<int> &ids, IGTag tag, std::string rule_id,
              std::string context_kind = "") {
    RuleFiring firing{std::move(rule_id), {}, std::move(context_kind)};
    for (int id : ids) {
      if (tagged(id)) continue;
      out_.tags[id - 1] = tag;
      firing.token_ids.push_back(id);
    }
    if (!firing.token_ids.empty()) out_.rule_trace.push_back(std::move(firing));
  }

  void AssignSubtree(int id, IGTag tag, const std::string &rule_id,
                     std::string context_kind = "") {
    Assign(SubtreeIds(statement_, id), tag, rule_id, std::move(context_kind));
  }

  // Context firings before the root are activation conditions, the rest
  // execution constraints. The distinction only appears in the trace.
  void AssignContext(int child, int root, const std::string &rule_id) {
    std::vector<int> ids = SubtreeIds(statement_, child);
    Assign(ids, IGTag::kContext, rule_id, ids.front() < root ? "AC" : "EC");
  }

  // Head and name-forming dependents take |main|; modifiers take |prop|.
  void AssignNominal(int head, IGTag main, IGTag prop,
                     const std::string &rule_id) {
    std::vector<int> main_ids = {head};
    std::vector<int> prop_ids;
    for (int child : statement_.children(head)) {
      const std::string &rel = token(child).deprel;
      if (RelationIn(rel, {"det", "compound", "mark", "amod", "nummod", "flat",
                           "fixed", "conj", "cc"})) {
        std::vector<int> sub = SubtreeIds(statement_, child);
        main_ids.insert(main_ids.end(), sub.begin(), sub.end());
      } else if (!RelationIn(rel, {"case", "punct"})) {
        std::vector<int> sub = SubtreeIds(statement_, child);
        prop_ids.insert(prop_ids.end(), sub.begin(), sub.end());
      }
    }
    std::sort(main_ids.begin(), main_ids.end());
    std::sort(prop_ids.begin(), prop_ids.end());
    Assign(main_ids, main, rule_id);
    Assign(prop_ids, prop, rule_id + ".prop");
  }

  void Diagnose(std::string message) {
    out_.diagnostics.push_back(std::move(message));
  }
  void MarkPreconditionUnmet() { out_.precondition_unmet = true; }

  AnnotatedStatement Finish() { return std::move(out_); }

 private:
  const Statement &statement_;
  AnnotatedStatement out_;
};

// First root in surface order; diagnoses additional roots.
int SelectRoot(Tagging &t) {
  std::span<const int> roots = t.statement().roots();
  if (roots.empty()) {
    throw ValidationError("statement " + t.statement().statement_id() +
                          ": unrooted statement");
  }
  if (roots.size() > 1) {
    t.Diagnose(std::to_string(roots.size()) +
               " candidate roots; using token " + std::to_string(roots[0]));
  }
  return roots[0];
}

std::string Describe(const Token &token) {
  return "'" + token.form + "' (token " + std::to_string(token.id) + ")";
}

// Whether the oblique |obl| names a lexicon actor: its case marker is "to" and
// a lexicon match inside its subtree covers the oblique's head.
bool IsIndirectOblique(const Statement &s, int obl,
                       const EntityLexicon *lexicon) {
  if (lexicon == nullptr) return false;
  bool to_case = false;
  for (int child : s.children(obl)) {
    const Token &c = s.token(child);
    if (BaseRelation(c.deprel) == "case" && Lowercase(c.LemmaOrForm()) == "to") {
      to_case = true;
    }
  }
  if (!to_case) return false;

  std::vector<int> ids = SubtreeIds(s, obl);
  for (size_t start = 0; start < ids.size(); ++start) {
    std::vector<std::string> lemmas;
    for (size_t i = start; i < ids.size(); ++i) {
      if (ids[i] != ids[start] + static_cast<int>(i - start)) break;
      lemmas.push_back(s.token(ids[i]).LemmaOrForm());
    }
    std::optional<LexiconMatch> m = lexicon->LongestMatch(lemmas);
    if (!m) continue;
    int first = ids[start];
    int last = first + static_cast<int>(m->length) - 1;
    if (first <= obl && obl <= last &&
        lexicon->entry(m->entry).kind == EntityKind::kActor) {
      return true;
    }
  }
  return false;
}

}  // namespace

bool IsModalLemma(std::string_view lemma) {
  std::string lower = Lowercase(lemma);
  return std::find(kModalLemmas.begin(), kModalLemmas.end(), lower) !=
         kModalLemmas.end();
}

AnnotatedStatement TagConstitutive(const Statement &statement) {
  Tagging t(statement, StatementType::kConstitutive);
  const int root = SelectRoot(t);
  const Token &root_token = t.token(root);

  if (root_token.upos != "VERB" && root_token.upos != "ADJ") {
    t.Diagnose("root " + Describe(root_token) + " is " + root_token.upos +
               ", not VERB or ADJ; no rule applies");
    t.MarkPreconditionUnmet();
    return t.Finish();
  }

  t.Assign({root},
           root_token.upos == "VERB" ? IGTag::kConstitutiveFunction
                                     : IGTag::kConstitutingProperties,
           "C1a");

  std::span<const int> children = statement.children(root);
  for (int child : children) {
    const std::string &rel = t.token(child).deprel;
    if (rel == "aux:pass" || BaseRelation(rel) == "cop") {
      t.Assign({child}, IGTag::kConstitutiveFunction, "C1b");
    }
  }

  std::vector<int> entities;
  for (int child : children) {
    if (RelationIn(t.token(child).deprel, {"nsubj", "expl"}) &&
        !t.tagged(child)) {
      t.Assign({child}, IGTag::kConstitutedEntity, "C1c");
      entities.push_back(child);
    }
  }

  for (int entity : entities) {
    for (int child : statement.children(entity)) {
      const Token &c = t.token(child);
      if (RelationIn(c.deprel, {"det", "compound", "mark"})) {
        t.AssignSubtree(child, IGTag::kConstitutedEntity, "C1d");
      } else if (BaseRelation(c.deprel) == "amod") {
        t.Diagnose("amod " + Describe(c) +
                   " of constituted entity left untagged");
      }
    }
  }

  for (int child : children) {
    if (RelationIn(t.token(child).deprel, {"obl", "advmod", "xcomp"})) {
      t.AssignContext(child, root, "C1e");
    }
  }

  for (int child : children) {
    const Token &c = t.token(child);
    if (c.deprel == "aux" && IsModalLemma(c.LemmaOrForm())) {
      t.Assign({child}, IGTag::kModal, "C2");
    }
  }
  return t.Finish();
}

AnnotatedStatement TagRegulative(const Statement &statement,
                                 const EntityLexicon *lexicon) {
  Tagging t(statement, StatementType::kRegulative);
  const int root = SelectRoot(t);
  const Token &root_token = t.token(root);

  if (root_token.upos != "VERB") {
    t.Diagnose("root " + Describe(root_token) + " is " + root_token.upos +
               ", not VERB; no rule applies");
    t.MarkPreconditionUnmet();
    return t.Finish();
  }

  t.Assign({root}, IGTag::kAim, "R1");

  std::span<const int> children = statement.children(root);
  for (int child : children) {
    const Token &c = t.token(child);
    if (c.deprel == "aux" && IsModalLemma(c.LemmaOrForm())) {
      t.Assign({child}, IGTag::kDeontic, "R2");
    }
  }
  for (int child : children) {
    if (BaseRelation(t.token(child).deprel) == "nsubj" && !t.tagged(child)) {
      t.AssignNominal(child, IGTag::kAttribute, IGTag::kAttributeProp, "R3");
    }
  }
  for (int child : children) {
    if (BaseRelation(t.token(child).deprel) == "obj" && !t.tagged(child)) {
      t.AssignNominal(child, IGTag::kDirectObject, IGTag::kDirectObjectProp,
                      "R4");
    }
  }
  for (int child : children) {
    if (t.tagged(child)) continue;
    std::string_view base = BaseRelation(t.token(child).deprel);
    if (base == "iobj") {
      t.AssignNominal(child, IGTag::kIndirectObject,
                      IGTag::kIndirectObjectProp, "R5");
    } else if (base == "obl" && IsIndirectOblique(statement, child, lexicon)) {
      t.AssignNominal(child, IGTag::kIndirectObject,
                      IGTag::kIndirectObjectProp, "R5.obl");
    }
  }
  for (int child : children) {
    if (!t.tagged(child) &&
        RelationIn(t.token(child).deprel, {"obl", "advmod", "xcomp", "advcl"})) {
      t.AssignContext(child, root, "R6");
    }
  }
  return t.Finish();
}

AnnotatedStatement TagStatement(const Statement &statement, StatementType type,
                                const EntityLexicon *lexicon) {
  return type == StatementType::kConstitutive
             ? TagConstitutive(statement)
             : TagRegulative(statement, lexicon);
}

std::vector<IGTag> CollapseTagsForEval(std::span<const IGTag> tags) {
  std::vector<IGTag> out(tags.begin(), tags.end());
  for (IGTag &tag : out) tag = CollapseTag(tag);
  return out;
}

std::vector<AnnotatedStatement> TagCorpusSerial(
    std::span<const Statement *const> statements,
    std::span<const StatementType> types, const EntityLexicon *lexicon) {
  if (statements.size() != types.size()) {
    throw std::invalid_argument("TagCorpus: one type per statement required");
  }
  std::vector<AnnotatedStatement> out;
  out.reserve(statements.size());
  for (size_t i = 0; i < statements.size(); ++i) {
    out.push_back(TagStatement(*statements[i], types[i], lexicon));
  }
  return out;
}

std::vector<AnnotatedStatement> TagCorpus(
    std::span<const Statement *const> statements,
    std::span<const StatementType> types, const EntityLexicon *lexicon) {
  if (statements.size() != types.size()) {
    throw std::invalid_argument("TagCorpus: one type per statement required");
  }
  const long n = static_cast<long>(statements.size());
  std::vector<AnnotatedStatement> out(n);
  // Exceptions must not escape the parallel region; keep the first by index.
  std::vector<std::exception_ptr> errors(n);
#pragma omp parallel for schedule(dynamic, 16)
  for (long i = 0; i < n; ++i) {
    try {
      out[i] = TagStatement(*statements[i], types[i], lexicon);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto &e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace igpipe
