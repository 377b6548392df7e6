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

#include "igpipe/annotation_io.h"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace igpipe {

using json = nlohmann::ordered_json;

std::string ToJsonLine(const AnnotatedStatement &s) {
  json j;
  j["doc_id"] = s.doc_id;
  j["statement_id"] = s.statement_id;
  j["type"] = StatementTypeName(s.type);
  if (s.type_score) j["type_score"] = *s.type_score;
  json tokens = json::array();
  for (size_t i = 0; i < s.tokens.size(); ++i) {
    const Token &t = s.tokens[i];
    tokens.push_back({{"id", t.id},
                      {"form", t.form},
                      {"lemma", t.lemma},
                      {"upos", t.upos},
                      {"head", t.head},
                      {"deprel", t.deprel},
                      {"tag", TagName(s.tags[i])}});
  }
  j["tokens"] = std::move(tokens);
  json trace = json::array();
  for (const RuleFiring &f : s.rule_trace) {
    json r = {{"rule", f.rule_id}, {"tokens", f.token_ids}};
    if (!f.context_kind.empty()) r["context"] = f.context_kind;
    trace.push_back(std::move(r));
  }
  j["rule_trace"] = std::move(trace);
  if (!s.diagnostics.empty()) j["diagnostics"] = s.diagnostics;
  if (s.precondition_unmet) j["precondition_unmet"] = true;
  return j.dump() + "\n";
}

std::vector<AnnotatedStatement> ParseAnnotationJsonl(std::string_view text) {
  std::vector<AnnotatedStatement> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      json j = json::parse(line);
      AnnotatedStatement s;
      s.doc_id = j.at("doc_id").get<std::string>();
      s.statement_id = j.at("statement_id").get<std::string>();
      auto type = ParseStatementType(j.at("type").get<std::string>());
      if (!type) throw ParseError(line_no, "unknown statement type");
      s.type = *type;
      if (j.contains("type_score")) s.type_score = j["type_score"].get<double>();
      for (const json &jt : j.at("tokens")) {
        Token t;
        t.id = jt.at("id").get<int>();
        t.form = jt.at("form").get<std::string>();
        t.lemma = jt.value("lemma", "_");
        t.upos = jt.value("upos", "_");
        t.head = jt.value("head", 0);
        t.deprel = jt.value("deprel", "_");
        auto tag = ParseTag(jt.at("tag").get<std::string>());
        if (!tag) {
          throw ParseError(line_no, "unknown tag '" +
                                        jt.at("tag").get<std::string>() + "'");
        }
        if (t.id != static_cast<int>(s.tokens.size()) + 1) {
          throw ParseError(line_no, "token ids must be contiguous 1..n");
        }
        s.tokens.push_back(std::move(t));
        s.tags.push_back(*tag);
      }
      if (j.contains("rule_trace")) {
        for (const json &jr : j["rule_trace"]) {
          s.rule_trace.push_back({jr.at("rule").get<std::string>(),
                                  jr.at("tokens").get<std::vector<int>>(),
                                  jr.value("context", "")});
        }
      }
      if (j.contains("diagnostics")) {
        s.diagnostics = j["diagnostics"].get<std::vector<std::string>>();
      }
      s.precondition_unmet = j.value("precondition_unmet", false);
      out.push_back(std::move(s));
    } catch (const json::exception &e) {
      throw ParseError(line_no, std::string("annotation JSON: ") + e.what());
    }
  }
  return out;
}

std::vector<AnnotatedStatement> ReadAnnotationFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseAnnotationJsonl(buf.str());
}

}  // namespace igpipe
