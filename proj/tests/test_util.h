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

// Helpers shared by the test binaries.

#ifndef IGPIPE_TESTS_TEST_UTIL_H_
#define IGPIPE_TESTS_TEST_UTIL_H_

#include <unistd.h>

#include <filesystem>
#include <initializer_list>
#include <string>
#include <vector>

#include "igpipe/conllu.h"
#include "igpipe/lexicon.h"
#include "igpipe/tagger.h"

namespace igpipe::testing {

// Source tree root, injected by CMake.
inline std::filesystem::path SourceDir() { return IGPIPE_SOURCE_DIR; }
inline std::string DataPath(const std::string &rel) {
  return (SourceDir() / rel).string();
}

struct Row {
  std::string form;
  std::string lemma;
  std::string upos;
  int head;
  std::string deprel;
};

inline Statement MakeStatement(std::initializer_list<Row> rows,
                               std::string id = "s1",
                               std::string doc = "doc") {
  std::vector<Token> tokens;
  int i = 0;
  for (const Row &r : rows) {
    Token t;
    t.id = ++i;
    t.form = r.form;
    t.lemma = r.lemma;
    t.upos = r.upos;
    t.head = r.head;
    t.deprel = r.deprel;
    tokens.push_back(std::move(t));
  }
  return Statement(std::move(doc), std::move(id), std::move(tokens));
}

// Forms of the tokens carrying |tag|, joined by single spaces.
inline std::string FormsWithTag(const AnnotatedStatement &a, IGTag tag) {
  std::string out;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a.tags[i] != tag) continue;
    if (!out.empty()) out += ' ';
    out += a.tokens[i].form;
  }
  return out;
}

// Fresh empty directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir &) = delete;
  TempDir &operator=(const TempDir &) = delete;

  const std::filesystem::path &path() const { return path_; }
  std::string operator/(const std::string &name) const {
    return (path_ / name).string();
  }

 private:
  std::filesystem::path path_;
};

inline TempDir::TempDir() {
  static int counter = 0;
  auto base = std::filesystem::temp_directory_path();
  do {
    path_ = base / ("igpipe-test-" + std::to_string(::getpid()) + "-" +
                    std::to_string(counter++));
  } while (std::filesystem::exists(path_));
  std::filesystem::create_directories(path_);
}

inline EntityLexicon MiniLexicon() {
  return EntityLexicon::ReadFile(DataPath("data/mini_corpus/lexicon.csv"));
}

}  // namespace igpipe::testing

#endif  // IGPIPE_TESTS_TEST_UTIL_H_
