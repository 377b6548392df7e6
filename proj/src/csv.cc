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

#include "igpipe/csv.h"

#include <algorithm>

#include "igpipe/conllu.h"

namespace igpipe {

std::vector<CsvRow> ParseCsv(std::string_view text) {
  std::vector<CsvRow> rows;
  CsvRow row;
  std::string field;
  bool in_quotes = false;
  bool row_has_content = false;
  int line = 1;
  int quote_line = 0;

  auto end_field = [&]() {
    row.push_back(std::move(field));
    field.clear();
  };
  auto end_row = [&]() {
    end_field();
    if (row_has_content) rows.push_back(std::move(row));
    row.clear();
    row_has_content = false;
  };

  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        in_quotes = true;
        quote_line = line;
        row_has_content = true;
        break;
      case ',':
        end_field();
        row_has_content = true;
        break;
      case '\r':
        break;
      case '\n':
        end_row();
        ++line;
        break;
      default:
        field += c;
        row_has_content = true;
    }
  }
  if (in_quotes) throw ParseError(quote_line, "unterminated quoted field");
  end_row();
  return rows;
}

std::vector<CsvRow> ReadCsvColumns(std::string_view text,
                                   const std::vector<std::string> &columns) {
  std::vector<CsvRow> rows = ParseCsv(text);
  if (rows.empty()) throw ParseError(1, "missing CSV header");
  const CsvRow &header = rows.front();
  std::vector<size_t> index;
  for (const std::string &col : columns) {
    auto it = std::find(header.begin(), header.end(), col);
    if (it == header.end()) {
      throw ParseError(1, "missing CSV column '" + col + "'");
    }
    index.push_back(it - header.begin());
  }
  std::vector<CsvRow> out;
  for (size_t r = 1; r < rows.size(); ++r) {
    CsvRow picked;
    for (size_t i : index) {
      picked.push_back(i < rows[r].size() ? rows[r][i] : std::string());
    }
    out.push_back(std::move(picked));
  }
  return out;
}

std::string CsvField(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string CsvLine(const CsvRow &row) {
  std::string out;
  for (size_t i = 0; i < row.size(); ++i) {
    if (i > 0) out += ',';
    out += CsvField(row[i]);
  }
  out += '\n';
  return out;
}

}  // namespace igpipe
