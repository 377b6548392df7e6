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

#include "igpipe/conllu.h"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace igpipe {
namespace {

std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  size_t start = 0;
  while (true) {
    size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

bool ParseInt(std::string_view s, int *value) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), *value);
  return ec == std::errc() && ptr == s.data() + s.size();
}

bool IsBlank(std::string_view line) {
  return line.find_first_not_of(" \t") == std::string_view::npos;
}

// Value of a "# key = value" comment, or empty when |comment| has another key.
bool CommentValue(std::string_view comment, std::string_view key,
                  std::string *value) {
  std::string_view body = comment.substr(1);
  while (!body.empty() && body.front() == ' ') body.remove_prefix(1);
  if (body.substr(0, key.size()) != key) return false;
  body.remove_prefix(key.size());
  while (!body.empty() && body.front() == ' ') body.remove_prefix(1);
  if (body.empty() || body.front() != '=') return false;
  body.remove_prefix(1);
  while (!body.empty() && body.front() == ' ') body.remove_prefix(1);
  *value = std::string(body);
  return true;
}

std::string FormatFeats(
    const std::vector<std::pair<std::string, std::string>> &feats) {
  if (feats.empty()) return "_";
  std::string out;
  for (const auto &[key, value] : feats) {
    if (!out.empty()) out += '|';
    out += key;
    out += '=';
    out += value;
  }
  return out;
}

struct SentenceBlock {
  int first_line = 0;
  std::vector<std::string> comments;
  std::vector<Token> tokens;
  std::vector<RawLine> raw_lines;
};

Token ParseTokenLine(std::span<const std::string_view> cols, int line) {
  Token token;
  if (!ParseInt(cols[0], &token.id)) {
    throw ParseError(line, "non-integer token id '" + std::string(cols[0]) +
                               "'");
  }
  token.form = cols[1];
  token.lemma = cols[2];
  token.upos = cols[3];
  token.xpos = cols[4];
  if (cols[5] != "_") {
    for (std::string_view feat : Split(cols[5], '|')) {
      size_t eq = feat.find('=');
      if (eq == std::string_view::npos || eq == 0) {
        throw ParseError(line, "malformed feature '" + std::string(feat) + "'");
      }
      token.feats.emplace_back(std::string(feat.substr(0, eq)),
                               std::string(feat.substr(eq + 1)));
    }
  }
  if (!ParseInt(cols[6], &token.head)) {
    throw ParseError(line, "non-integer head '" + std::string(cols[6]) + "'");
  }
  token.deprel = cols[7] == "_" ? "" : std::string(cols[7]);
  token.deps = cols[8];
  token.misc = cols[9];
  return token;
}

}  // namespace

ParseError::ParseError(int line, const std::string &message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line_(line) {}

const std::string &Token::LemmaOrForm() const {
  return lemma.empty() || lemma == "_" ? form : lemma;
}

Statement::Statement(std::string doc_id, std::string statement_id,
                     std::vector<Token> tokens,
                     std::vector<std::string> comments,
                     std::vector<RawLine> raw_lines)
    : doc_id_(std::move(doc_id)),
      statement_id_(std::move(statement_id)),
      tokens_(std::move(tokens)),
      comments_(std::move(comments)),
      raw_lines_(std::move(raw_lines)) {
  const std::string where = "statement " + statement_id_ + ": ";
  const int n = static_cast<int>(tokens_.size());
  if (n == 0) throw ValidationError(where + "empty statement");

  children_.assign(n + 1, {});
  for (int i = 0; i < n; ++i) {
    const Token &t = tokens_[i];
    if (t.id != i + 1) {
      throw ValidationError(where + "token ids must be contiguous 1..n, found " +
                            std::to_string(t.id) + " at position " +
                            std::to_string(i + 1));
    }
    if (t.deprel.empty()) {
      throw ValidationError(where + "empty deprel at token " +
                            std::to_string(t.id));
    }
    if (t.head == t.id) {
      throw ValidationError(where + "self-loop at token " +
                            std::to_string(t.id));
    }
    if (t.head < 0 || t.head > n) {
      throw ValidationError(where + "head " + std::to_string(t.head) +
                            " out of range at token " + std::to_string(t.id));
    }
    if ((t.head == 0) != (t.deprel == "root")) {
      throw ValidationError(where + "token " + std::to_string(t.id) +
                            " has head " + std::to_string(t.head) +
                            " with deprel '" + t.deprel +
                            "' (head 0 iff deprel root)");
    }
    children_[t.head].push_back(t.id);
  }

  // Walk each head chain; a chain longer than n revisits a token.
  std::vector<int> state(n + 1, 0);  // 0 unvisited, 1 on path, 2 done
  for (int start = 1; start <= n; ++start) {
    std::vector<int> path;
    int cur = start;
    while (cur != 0 && state[cur] == 0) {
      state[cur] = 1;
      path.push_back(cur);
      cur = tokens_[cur - 1].head;
    }
    if (cur != 0 && state[cur] == 1) {
      throw ValidationError(where + "cyclic head chain at token " +
                            std::to_string(cur));
    }
    for (int id : path) state[id] = 2;
  }

  if (children_[0].size() > 1) {
    warnings_.push_back(where + std::to_string(children_[0].size()) +
                        " roots; rules use the first");
  }

  for (const std::string &c : comments_) {
    std::string value;
    if (CommentValue(c, "text", &value)) {
      text_ = value;
      break;
    }
  }
  if (text_.empty()) {
    for (size_t i = 0; i < tokens_.size(); ++i) {
      text_ += tokens_[i].form;
      bool no_space = tokens_[i].misc.find("SpaceAfter=No") != std::string::npos;
      if (i + 1 < tokens_.size() && !no_space) text_ += ' ';
    }
  }
}

const Token &Statement::token(int id) const {
  if (!contains(id)) {
    throw LookupError("statement " + statement_id_ + ": no token " +
                      std::to_string(id));
  }
  return tokens_[id - 1];
}

std::span<const int> Statement::children(int id) const {
  if (id != 0 && !contains(id)) {
    throw LookupError("statement " + statement_id_ + ": no token " +
                      std::to_string(id));
  }
  return children_[id];
}

std::vector<std::string> Document::Warnings() const {
  std::vector<std::string> out;
  for (const Statement &s : statements) {
    out.insert(out.end(), s.warnings().begin(), s.warnings().end());
  }
  return out;
}

Document ParseConllu(std::string_view text, const std::string &doc_id) {
  Document doc;
  doc.doc_id = doc_id;

  std::vector<SentenceBlock> blocks;
  SentenceBlock cur;
  bool open = false;
  int line_no = 0;

  auto flush = [&]() {
    if (open && !cur.tokens.empty()) blocks.push_back(std::move(cur));
    cur = SentenceBlock();
    open = false;
  };

  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (end == text.size() && line.empty()) break;

    if (IsBlank(line)) {
      flush();
      continue;
    }
    if (!open) {
      open = true;
      cur.first_line = line_no;
    }
    if (line.front() == '#') {
      cur.comments.emplace_back(line);
      continue;
    }
    std::vector<std::string_view> cols = Split(line, '\t');
    if (cols.size() != 10) {
      throw ParseError(line_no, "expected 10 tab-separated columns, found " +
                                    std::to_string(cols.size()));
    }
    if (cols[0].find_first_of("-.") != std::string_view::npos) {
      cur.raw_lines.push_back({cur.tokens.size(), std::string(line)});
      continue;
    }
    cur.tokens.push_back(ParseTokenLine(cols, line_no));
  }
  flush();

  std::vector<std::string> seen;
  for (size_t i = 0; i < blocks.size(); ++i) {
    SentenceBlock &b = blocks[i];
    std::string sent_id = "s" + std::to_string(i + 1);
    for (const std::string &c : b.comments) {
      std::string value;
      if (CommentValue(c, "sent_id", &value)) sent_id = value;
      if (CommentValue(c, "newdoc id", &value)) doc.metadata["newdoc id"] = value;
    }
    if (std::find(seen.begin(), seen.end(), sent_id) != seen.end()) {
      throw ParseError(b.first_line, "duplicate sent_id '" + sent_id + "'");
    }
    seen.push_back(sent_id);
    doc.statements.emplace_back(doc_id, sent_id, std::move(b.tokens),
                                std::move(b.comments), std::move(b.raw_lines));
  }
  return doc;
}

Document ReadConlluFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  Document doc = ParseConllu(buf.str(), std::filesystem::path(path).stem());
  doc.metadata["source"] = path;
  return doc;
}

std::string WriteConllu(const Statement &statement) {
  std::string out;
  for (const std::string &c : statement.comments()) {
    out += c;
    out += '\n';
  }
  auto raw = statement.raw_lines().begin();
  const auto raw_end = statement.raw_lines().end();
  const auto tokens = statement.tokens();
  for (size_t i = 0; i <= tokens.size(); ++i) {
    for (; raw != raw_end && raw->position == i; ++raw) {
      out += raw->text;
      out += '\n';
    }
    if (i == tokens.size()) break;
    const Token &t = tokens[i];
    out += std::to_string(t.id) + '\t' + t.form + '\t' + t.lemma + '\t' +
           t.upos + '\t' + t.xpos + '\t' + FormatFeats(t.feats) + '\t' +
           std::to_string(t.head) + '\t' + t.deprel + '\t' + t.deps + '\t' +
           t.misc + '\n';
  }
  out += '\n';
  return out;
}

std::string WriteConllu(const Document &document) {
  std::string out;
  for (const Statement &s : document.statements) out += WriteConllu(s);
  return out;
}

std::vector<int> SubtreeIds(const Statement &statement, int token_id) {
  statement.token(token_id);  // throws on unknown id
  std::vector<int> ids;
  std::vector<int> stack = {token_id};
  while (!stack.empty()) {
    int id = stack.back();
    stack.pop_back();
    ids.push_back(id);
    for (int child : statement.children(id)) stack.push_back(child);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<Token> Subtree(const Statement &statement, int token_id) {
  std::vector<Token> out;
  for (int id : SubtreeIds(statement, token_id)) {
    out.push_back(statement.token(id));
  }
  return out;
}

std::vector<std::string> CollectConlluInputs(
    const std::vector<std::string> &paths) {
  namespace fs = std::filesystem;
  std::vector<std::string> files;
  for (const std::string &p : paths) {
    if (fs::is_directory(p)) {
      for (const auto &entry : fs::recursive_directory_iterator(p)) {
        if (entry.is_regular_file() && entry.path().extension() == ".conllu") {
          files.push_back(entry.path().string());
        }
      }
    } else if (fs::is_regular_file(p)) {
      files.push_back(p);
    } else {
      throw LookupError("input not found: " + p);
    }
  }
  std::sort(files.begin(), files.end());
  files.erase(std::unique(files.begin(), files.end()), files.end());
  return files;
}

}  // namespace igpipe
