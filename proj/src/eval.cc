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

#include "igpipe/eval.h"

#include <cstdio>
#include <map>
#include <utility>

#include "igpipe/conllu.h"
#include "igpipe/csv.h"

namespace igpipe {
namespace {

struct ComponentDef {
  StatementType layer;
  const char *name;
  IGTag tag;
};

constexpr ComponentDef kComponents[] = {
    {StatementType::kRegulative, "Attribute", IGTag::kAttribute},
    {StatementType::kRegulative, "Object", IGTag::kObject},
    {StatementType::kRegulative, "Deontic", IGTag::kDeontic},
    {StatementType::kRegulative, "Aim", IGTag::kAim},
    {StatementType::kRegulative, "Context", IGTag::kContext},
    {StatementType::kConstitutive, "Entity", IGTag::kConstitutedEntity},
    {StatementType::kConstitutive, "Property", IGTag::kConstitutingProperties},
    {StatementType::kConstitutive, "Function", IGTag::kConstitutiveFunction},
    {StatementType::kConstitutive, "Modal", IGTag::kModal},
    {StatementType::kConstitutive, "Context", IGTag::kContext},
};

double Ratio(size_t num, size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

double HarmonicMean(double p, double r) {
  return p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r);
}

std::string Fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

std::string Key(const AnnotatedStatement &s) {
  return s.doc_id + "/" + s.statement_id;
}

}  // namespace

const ComponentScore &EvalReport::Find(StatementType layer,
                                       std::string_view component) const {
  for (const ComponentScore &c : components) {
    if (c.layer == layer && c.component == component) return c;
  }
  throw LookupError("no component " + std::string(component));
}

std::string EvalReport::ToCsv() const {
  std::string out =
      CsvLine({"layer", "component", "f1", "precision", "recall", "support",
               "flags"});
  for (StatementType layer :
       {StatementType::kRegulative, StatementType::kConstitutive}) {
    std::string name(StatementTypeName(layer));
    for (const ComponentScore &c : components) {
      if (c.layer != layer) continue;
      std::string flags;
      if (c.precision_undefined) flags = "precision_undefined";
      if (c.support == 0) flags += flags.empty() ? "absent_from_gold"
                                                 : ";absent_from_gold";
      out += CsvLine({name, c.component, Fixed(c.f1), Fixed(c.precision),
                      Fixed(c.recall), std::to_string(c.support), flags});
    }
    const LayerScore &l = Layer(layer);
    out += CsvLine({name, "Overall", Fixed(l.macro_f1), Fixed(l.macro_precision),
                    Fixed(l.macro_recall), std::to_string(l.support), "macro"});
    out += CsvLine({name, "Overall (micro)", Fixed(l.micro_f1),
                    Fixed(l.micro_precision), Fixed(l.micro_recall),
                    std::to_string(l.support), "micro"});
  }
  return out;
}

EvalReport EvaluateTagger(std::span<const AnnotatedStatement> predicted,
                          std::span<const AnnotatedStatement> gold) {
  std::map<std::string, const AnnotatedStatement *> pred_by_key;
  for (const AnnotatedStatement &p : predicted) {
    if (!pred_by_key.emplace(Key(p), &p).second) {
      throw ValidationError("duplicate predicted statement " + Key(p));
    }
  }

  EvalReport report;
  for (const ComponentDef &def : kComponents) {
    ComponentScore c;
    c.layer = def.layer;
    c.component = def.name;
    c.tag = def.tag;
    report.components.push_back(c);
  }

  std::map<std::string, bool> seen;
  for (const AnnotatedStatement &g : gold) {
    const std::string key = Key(g);
    if (!seen.emplace(key, true).second) {
      throw ValidationError("duplicate gold statement " + key);
    }
    auto it = pred_by_key.find(key);
    if (it == pred_by_key.end()) {
      throw ValidationError("misaligned corpora: no prediction for " + key);
    }
    const AnnotatedStatement &p = *it->second;
    if (p.size() != g.size()) {
      throw ValidationError("misaligned corpora: " + key + " has " +
                            std::to_string(p.size()) +
                            " predicted tokens but " +
                            std::to_string(g.size()) + " gold tokens");
    }
    (g.type == StatementType::kRegulative ? report.regulative
                                          : report.constitutive)
        .statements++;
    std::vector<IGTag> gt = CollapseTagsForEval(g.tags);
    std::vector<IGTag> pt = CollapseTagsForEval(p.tags);
    for (ComponentScore &c : report.components) {
      if (c.layer != g.type) continue;
      for (size_t i = 0; i < gt.size(); ++i) {
        bool in_gold = gt[i] == c.tag;
        bool in_pred = pt[i] == c.tag;
        c.support += in_gold;
        c.predicted += in_pred;
        c.correct += in_gold && in_pred;
      }
    }
  }
  for (const AnnotatedStatement &p : predicted) {
    if (!seen.count(Key(p))) {
      throw ValidationError("misaligned corpora: no gold statement for " +
                            Key(p));
    }
  }

  for (StatementType layer :
       {StatementType::kRegulative, StatementType::kConstitutive}) {
    LayerScore &l = layer == StatementType::kRegulative ? report.regulative
                                                        : report.constitutive;
    size_t present = 0, predicted_sum = 0, correct_sum = 0;
    for (ComponentScore &c : report.components) {
      if (c.layer != layer) continue;
      c.precision_undefined = c.predicted == 0;
      c.precision = Ratio(c.correct, c.predicted);
      c.recall = Ratio(c.correct, c.support);
      c.f1 = HarmonicMean(c.precision, c.recall);
      predicted_sum += c.predicted;
      correct_sum += c.correct;
      l.support += c.support;
      if (c.support > 0) {
        ++present;
        l.macro_precision += c.precision;
        l.macro_recall += c.recall;
        l.macro_f1 += c.f1;
      }
    }
    if (present > 0) {
      l.macro_precision /= present;
      l.macro_recall /= present;
      l.macro_f1 /= present;
    }
    l.micro_precision = Ratio(correct_sum, predicted_sum);
    l.micro_recall = Ratio(correct_sum, l.support);
    l.micro_f1 = HarmonicMean(l.micro_precision, l.micro_recall);
  }
  return report;
}

}  // namespace igpipe
