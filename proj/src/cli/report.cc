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

#include "kanon/cli/report.h"

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"

namespace kanon::cli {

using Json = nlohmann::ordered_json;

Report FromAnonymity(const AnonymityReport& r) {
  Report out;
  out.command = "audit";
  out.verdict = r.verdict;
  out.k = r.k_requested;
  out.pattrs = r.pattrs;
  out.rows = r.per_row;
  out.witnesses = r.witnesses;
  out.details["min_count"] =
      r.min_count.has_value() ? Json(*r.min_count) : Json(nullptr);
  out.details["consistency_violations"] = r.consistency_violations;
  out.details["degenerate"] = r.degenerate;
  return out;
}

Report FromConservative(const ConservativeReport& r) {
  Report out;
  out.command = "conservative";
  out.verdict = r.verdict;
  out.k = r.k_requested;
  out.pattrs = r.pattrs;
  out.rows = r.per_row;
  out.witnesses = r.witnesses;
  Json counterexample = Json::array();
  for (const Tuple& t : r.counterexample) counterexample.push_back(t.values());
  out.details["counterexample"] = std::move(counterexample);
  out.details["worlds_examined"] = r.worlds_examined;
  out.details["degenerate"] = r.degenerate;
  return out;
}

Json ToJson(const Report& report) {
  Json j;
  j["command"] = report.command;
  j["verdict"] =
      report.verdict.has_value() ? Json(*report.verdict) : Json(nullptr);
  j["k"] = report.k.has_value() ? Json(*report.k) : Json(nullptr);
  j["pattrs"] = report.pattrs.names();
  Json rows = Json::array();
  for (const RowCount& rc : report.rows) {
    Json row;
    row["index"] = rc.index;
    row["count"] = rc.count;
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  j["witnesses"] = report.witnesses;
  for (const auto& [key, value] : report.details.items()) j[key] = value;
  j["warnings"] = report.warnings;
  j["timings"] = Json{{"total_ms", report.elapsed_ms}};
  return j;
}

std::string ToText(const Report& report) {
  std::string out = absl::StrCat("command: ", report.command, "\n");
  if (report.verdict.has_value()) {
    absl::StrAppend(&out, "verdict: ", *report.verdict ? "true" : "false",
                    "\n");
  }
  if (report.k.has_value()) absl::StrAppend(&out, "k: ", *report.k, "\n");
  if (!report.pattrs.empty()) {
    absl::StrAppend(&out, "pattrs: ", report.pattrs.ToString(), "\n");
  }
  for (const RowCount& rc : report.rows) {
    absl::StrAppend(&out, "row ", rc.index, ": ", rc.count, "\n");
  }
  if (!report.rows.empty() || report.verdict.has_value()) {
    absl::StrAppend(&out, "witnesses: [", absl::StrJoin(report.witnesses, ", "),
                    "]\n");
  }
  for (const auto& [key, value] : report.details.items()) {
    absl::StrAppend(&out, key, ": ",
                    value.is_string() ? value.get<std::string>() : value.dump(),
                    "\n");
  }
  for (const std::string& w : report.warnings) {
    absl::StrAppend(&out, "warning: ", w, "\n");
  }
  return out;
}

}  // namespace kanon::cli
