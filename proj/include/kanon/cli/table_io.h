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

#ifndef KANON_CLI_TABLE_IO_H_
#define KANON_CLI_TABLE_IO_H_

#include <string>
#include <string_view>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "kanon/decoding.h"
#include "kanon/relation.h"
#include "kanon/world.h"

namespace kanon::cli {

enum class ValueKind { kSpecific, kMixed };

// Parses CSV text whose first record is the header. With kSpecific every
// cell must be specific under `dec`. Errors name the offending line.
absl::StatusOr<Table> ParseTable(
    std::string_view text, ValueKind kind,
    const DecodingFunction& dec = DecodingFunction::Identity());

absl::StatusOr<World> ParseWorld(
    std::string_view text, const std::string& id_column,
    const WorldOptions& options = {},
    const DecodingFunction& dec = DecodingFunction::Identity());

// File wrappers; error messages are prefixed with the path.
absl::StatusOr<Table> IngestTable(
    const std::string& path, ValueKind kind,
    const DecodingFunction& dec = DecodingFunction::Identity());
absl::StatusOr<World> IngestWorld(
    const std::string& path, const std::string& id_column,
    const WorldOptions& options = {},
    const DecodingFunction& dec = DecodingFunction::Identity());

std::string FormatTable(const Table& table);

absl::StatusOr<std::string> ReadFile(const std::string& path);
absl::Status WriteFile(const std::string& path, std::string_view content);

}  // namespace kanon::cli

#endif  // KANON_CLI_TABLE_IO_H_
