//
// Copyright 2026 The kanon Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

// Minimal RFC 4180 CSV: comma separator, double-quote quoting with "" as the
// escaped quote, LF or CRLF record ends. Blank lines are skipped. No type
// inference; every field is text.

#ifndef KANON_CLI_CSV_H_
#define KANON_CLI_CSV_H_

#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"

namespace kanon::cli {

struct CsvRecord {
  std::vector<std::string> fields;
  // 1-based line on which the record starts.
  int line = 0;
};

absl::StatusOr<std::vector<CsvRecord>> ParseCsv(std::string_view text);

std::string FormatCsvRow(const std::vector<std::string>& fields);

}  // namespace kanon::cli

#endif  // KANON_CLI_CSV_H_
