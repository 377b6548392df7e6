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

// In-memory model of CoNLL-U dependency-annotated documents.

#ifndef IGPIPE_CONLLU_H_
#define IGPIPE_CONLLU_H_

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace igpipe {

// Malformed input text. Carries the 1-based line number where it was found.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string &message);
  int line() const { return line_; }

 private:
  int line_;
};

// Structurally invalid statement (self-loops, cycles, dangling heads, ...).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reference to a token or entry that does not exist.
class LookupError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

struct Token {
  int id = 0;
  std::string form;
  std::string lemma;
  std::string upos;
  std::string xpos = "_";
  // Morphological features in file order, e.g. {"Number", "Sing"}.
  std::vector<std::pair<std::string, std::string>> feats;
  int head = 0;
  std::string deprel;
  std::string deps = "_";
  std::string misc = "_";

  // Lemma, or the form when the lemma column is empty ("_").
  const std::string &LemmaOrForm() const;
  bool IsPunct() const { return upos == "PUNCT"; }
};

// Line of the original sentence block that is not part of the basic tree:
// multiword-token ranges ("3-4") and empty nodes ("5.1"). |position| is the
// number of regular tokens that precede the line.
struct RawLine {
  size_t position = 0;
  std::string text;
};

// One dependency-parsed atomic statement. Immutable after construction; the
// constructor validates the tree invariants and throws ValidationError.
class Statement {
 public:
  Statement(std::string doc_id, std::string statement_id,
            std::vector<Token> tokens, std::vector<std::string> comments = {},
            std::vector<RawLine> raw_lines = {});

  const std::string &doc_id() const { return doc_id_; }
  const std::string &statement_id() const { return statement_id_; }
  const std::string &text() const { return text_; }
  std::span<const Token> tokens() const { return tokens_; }
  size_t size() const { return tokens_.size(); }
  const std::vector<std::string> &comments() const { return comments_; }
  const std::vector<RawLine> &raw_lines() const { return raw_lines_; }
  const std::vector<std::string> &warnings() const { return warnings_; }

  // Token by 1-based id; throws LookupError.
  const Token &token(int id) const;
  bool contains(int id) const {
    return id >= 1 && static_cast<size_t>(id) <= tokens_.size();
  }

  // Direct dependents of |id| in surface order. id 0 yields the roots.
  std::span<const int> children(int id) const;
  std::span<const int> roots() const { return children(0); }

 private:
  std::string doc_id_;
  std::string statement_id_;
  std::vector<Token> tokens_;
  std::vector<std::string> comments_;
  std::vector<RawLine> raw_lines_;
  std::string text_;
  std::vector<std::string> warnings_;
  // children_[0] holds roots, children_[i] the dependents of token i.
  std::vector<std::vector<int>> children_;
};

struct Document {
  std::string doc_id;
  std::vector<Statement> statements;
  std::map<std::string, std::string> metadata;

  // Validation warnings of all statements, prefixed by statement id.
  std::vector<std::string> Warnings() const;
};

// Parses CoNLL-U text. Sentences without "# sent_id" get ids s1, s2, ...
Document ParseConllu(std::string_view text, const std::string &doc_id);

// Reads and parses a .conllu file; doc_id defaults to the file stem.
Document ReadConlluFile(const std::string &path);

// Serializes back to CoNLL-U. Lossless for the ten standard columns, comment
// lines, multiword ranges and empty nodes.
std::string WriteConllu(const Document &document);
std::string WriteConllu(const Statement &statement);

// The token plus all transitive dependents, in surface order.
std::vector<Token> Subtree(const Statement &statement, int token_id);

// Ids of Subtree(statement, token_id), ascending.
std::vector<int> SubtreeIds(const Statement &statement, int token_id);

// Collects .conllu files from a mix of files and directories, sorted.
std::vector<std::string> CollectConlluInputs(
    const std::vector<std::string> &paths);

}  // namespace igpipe

#endif  // IGPIPE_CONLLU_H_
