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

#include "kanon/cli/rules_io.h"

#include <vector>

#include "absl/status/status.h"
#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "kanon/status_macros.h"

namespace kanon::cli {
namespace {

absl::Status LineError(int line, absl::string_view msg) {
  return absl::InvalidArgumentError(absl::StrCat("line ", line, ": ", msg));
}

absl::StatusOr<std::vector<Value>> ParseValueList(absl::string_view text,
                                                  int line) {
  std::vector<Value> values;
  for (absl::string_view part : absl::StrSplit(text, '|')) {
    part = absl::StripAsciiWhitespace(part);
    if (part.empty()) return LineError(line, "empty value in list");
    values.emplace_back(part);
  }
  return values;
}

absl::Status ParseDomain(absl::string_view body, int line,
                         DecodingFunction::Builder& builder) {
  const size_t eq = body.find('=');
  if (eq == absl::string_view::npos) {
    return LineError(line, "expected 'domain <attr> = v1 | ...'");
  }
  const absl::string_view attr = absl::StripAsciiWhitespace(body.substr(0, eq));
  if (attr.empty()) return LineError(line, "missing attribute name");
  KANON_ASSIGN_OR_RETURN(std::vector<Value> values,
                         ParseValueList(body.substr(eq + 1), line));
  return builder.DeclareDomain(std::string(attr), std::move(values), line);
}

absl::Status ParseRule(absl::string_view body, int line,
                       DecodingFunction::Builder& builder) {
  const size_t colon = body.find(':');
  const size_t arrow = body.find("=>");
  if (colon == absl::string_view::npos || arrow == absl::string_view::npos ||
      arrow < colon) {
    return LineError(line, "expected 'rule <attr> : <general> => ...'");
  }
  const absl::string_view attr =
      absl::StripAsciiWhitespace(body.substr(0, colon));
  const absl::string_view general =
      absl::StripAsciiWhitespace(body.substr(colon + 1, arrow - colon - 1));
  const absl::string_view rhs = absl::StripAsciiWhitespace(body.substr(arrow + 2));
  if (attr.empty()) return LineError(line, "missing attribute name");
  if (general.empty()) return LineError(line, "missing general value");
  if (rhs.empty()) return LineError(line, "missing right-hand side");
  if (rhs == "prefix") {
    return builder.AddPrefixRule(std::string(attr), std::string(general), line);
  }
  if (rhs == "interval") {
    return builder.AddIntervalRule(std::string(attr), std::string(general),
                                   line);
  }
  KANON_ASSIGN_OR_RETURN(std::vector<Value> values, ParseValueList(rhs, line));
  return builder.AddExplicitRule(std::string(attr), std::string(general),
                                 std::move(values), line);
}

}  // namespace

absl::StatusOr<DecodingFunction> ParseDecodingRules(std::string_view text) {
  DecodingFunction::Builder builder;
  int line = 0;
  for (absl::string_view raw :
       absl::StrSplit(absl::string_view(text.data(), text.size()), '\n')) {
    ++line;
    const absl::string_view stmt = absl::StripAsciiWhitespace(raw);
    if (stmt.empty() || stmt.front() == '#') continue;
    const size_t space = stmt.find_first_of(" \t");
    const absl::string_view keyword = stmt.substr(0, space);
    const absl::string_view body =
        space == absl::string_view::npos ? "" : stmt.substr(space + 1);
    if (keyword == "domain") {
      KANON_RETURN_IF_ERROR(ParseDomain(body, line, builder));
    } else if (keyword == "rule") {
      KANON_RETURN_IF_ERROR(ParseRule(body, line, builder));
    } else {
      return LineError(line, absl::StrCat("unknown statement '", keyword,
                                          "'; expected 'domain' or 'rule'"));
    }
  }
  return std::move(builder).Build();
}

std::string FormatDecodingRules(const DecodingFunction& dec) {
  std::string out;
  for (const auto& [attr, values] : dec.domains()) {
    absl::StrAppend(&out, "domain ", attr, " = ",
                    absl::StrJoin(values, " | "), "\n");
  }
  for (const DecodingRule& rule : dec.rules()) {
    absl::StrAppend(&out, "rule ", rule.attribute, " : ", rule.general, " => ");
    switch (rule.kind) {
      case RuleKind::kPrefix:
        absl::StrAppend(&out, "prefix\n");
        break;
      case RuleKind::kInterval:
        absl::StrAppend(&out, "interval\n");
        break;
      case RuleKind::kExplicit:
        absl::StrAppend(&out, absl::StrJoin(rule.decoded, " | "), "\n");
        break;
    }
  }
  return out;
}

}  // namespace kanon::cli
