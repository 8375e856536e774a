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

#ifndef KANON_CLI_REPORT_H_
#define KANON_CLI_REPORT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "kanon/anonymity.h"
#include "kanon/relation.h"

namespace kanon::cli {

// Command-independent report envelope. JSON field order is fixed:
// command, verdict, k, pattrs, rows, witnesses, <details>, warnings, timings.
struct Report {
  std::string command;
  std::optional<bool> verdict;
  std::optional<int64_t> k;
  AttributeSet pattrs;
  std::vector<RowCount> rows;
  std::vector<size_t> witnesses;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  std::vector<std::string> warnings;
  double elapsed_ms = 0;
};

Report FromAnonymity(const AnonymityReport& r);
Report FromConservative(const ConservativeReport& r);

nlohmann::ordered_json ToJson(const Report& report);

// Human-readable rendering. Timings are omitted so output is reproducible.
std::string ToText(const Report& report);

}  // namespace kanon::cli

#endif  // KANON_CLI_REPORT_H_
