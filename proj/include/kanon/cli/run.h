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

#ifndef KANON_CLI_RUN_H_
#define KANON_CLI_RUN_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "kanon/relation.h"

namespace kanon::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

enum class Command { kAudit, kQi, kConsistency, kConservative, kFixture };
enum class OutputFormat { kText, kJson };

struct RunConfig {
  Command command = Command::kAudit;
  std::string world_path;
  std::string table_path;
  std::string rules_path;
  std::optional<int64_t> k;
  std::string id_column = "ID";
  bool allow_duplicate_individual_rows = false;
  OutputFormat format = OutputFormat::kText;

  // audit / conservative / consistency.
  std::optional<AttributeSet> public_override;

  // conservative.
  bool enumerate = false;
  uint64_t max_choice_vectors = 1'000'000;

  // qi.
  std::vector<AttributeSet> qi_sets;
  std::optional<size_t> max_qi_size;

  // fixture.
  std::string fixture;
  std::string out_dir;
  int n = 2;
};

// Runs an already validated configuration. Reports go to `out`, diagnostics
// to `err`. Returns one of the kExit* codes.
int Execute(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses `args` (args[0] is the program name) and executes.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace kanon::cli

#endif  // KANON_CLI_RUN_H_
