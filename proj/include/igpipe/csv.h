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

// Minimal RFC 4180 CSV reading and writing.

#ifndef IGPIPE_CSV_H_
#define IGPIPE_CSV_H_

#include <string>
#include <string_view>
#include <vector>

namespace igpipe {

using CsvRow = std::vector<std::string>;

// Parses quoted and unquoted fields. Blank lines are skipped. Throws
// ParseError on an unterminated quote.
std::vector<CsvRow> ParseCsv(std::string_view text);

// Parses a CSV file with a header row into rows keyed by the named columns,
// in |columns| order. Throws ParseError if a column is missing.
std::vector<CsvRow> ReadCsvColumns(std::string_view text,
                                   const std::vector<std::string> &columns);

std::string CsvField(std::string_view field);
std::string CsvLine(const CsvRow &row);

}  // namespace igpipe

#endif  // IGPIPE_CSV_H_
