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

// Decoding-rules text format, one statement per line:
//
//   domain <attr> = v1 | v2 | ... | vn
//   rule <attr> : <general> => v1 | v2 | ...
//   rule <attr> : <prefix>* => prefix
//   rule <attr> : [lo-hi] => interval
//
// Lines whose first non-blank character is '#' are comments. Tokens are
// trimmed of surrounding whitespace.

#ifndef KANON_CLI_RULES_IO_H_
#define KANON_CLI_RULES_IO_H_

#include <string>
#include <string_view>

#include "absl/status/statusor.h"
#include "kanon/decoding.h"

namespace kanon::cli {

absl::StatusOr<DecodingFunction> ParseDecodingRules(std::string_view text);

// Pattern rules are written back in pattern form; everything else is written
// as an explicit rule.
std::string FormatDecodingRules(const DecodingFunction& dec);

}  // namespace kanon::cli

#endif  // KANON_CLI_RULES_IO_H_
