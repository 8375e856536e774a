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

#include "kanon/cli/table_io.h"

#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "kanon/cli/csv.h"
#include "kanon/status_macros.h"

namespace kanon::cli {
namespace {

absl::Status LineError(int line, absl::string_view msg) {
  return absl::InvalidArgumentError(absl::StrCat("line ", line, ": ", msg));
}

struct LoadedTable {
  Table table;
  std::vector<int> lines;  // CSV line of each data row.
};

absl::StatusOr<LoadedTable> Load(std::string_view text, ValueKind kind,
                                 const DecodingFunction& dec) {
  KANON_ASSIGN_OR_RETURN(std::vector<CsvRecord> records, ParseCsv(text));
  if (records.empty()) return absl::InvalidArgumentError("missing header row");

  const CsvRecord& header = records.front();
  std::map<std::string, int> seen;
  for (const std::string& name : header.fields) {
    if (name.empty()) return LineError(header.line, "empty header name");
    if (!seen.emplace(name, header.line).second) {
      return LineError(header.line,
                       absl::StrCat("duplicate header name '", name, "'"));
    }
  }

  std::vector<Row> rows;
  std::vector<int> lines;
  for (size_t r = 1; r < records.size(); ++r) {
    const CsvRecord& rec = records[r];
    if (rec.fields.size() != header.fields.size()) {
      return LineError(rec.line,
                       absl::StrCat("expected ", header.fields.size(),
                                    " fields, found ", rec.fields.size()));
    }
    for (size_t c = 0; c < rec.fields.size(); ++c) {
      if (rec.fields[c].empty()) {
        return LineError(rec.line, absl::StrCat("empty cell in column '",
                                                header.fields[c], "'"));
      }
      if (kind == ValueKind::kSpecific &&
          dec.IsGeneral(header.fields[c], rec.fields[c])) {
        return LineError(
            rec.line, absl::StrCat("general value '", rec.fields[c],
                                   "' in column '", header.fields[c],
                                   "' where only specific values are allowed"));
      }
    }
    rows.push_back(rec.fields);
    lines.push_back(rec.line);
  }
  KANON_ASSIGN_OR_RETURN(Table table,
                         Table::FromRows(header.fields, std::move(rows)));
  return LoadedTable{std::move(table), std::move(lines)};
}

absl::Status WithPath(const std::string& path, const absl::Status& status) {
  return absl::Status(status.code(), absl::StrCat(path, ": ", status.message()));
}

}  // namespace

absl::StatusOr<Table> ParseTable(std::string_view text, ValueKind kind,
                                 const DecodingFunction& dec) {
  KANON_ASSIGN_OR_RETURN(LoadedTable loaded, Load(text, kind, dec));
  return std::move(loaded.table);
}

absl::StatusOr<World> ParseWorld(std::string_view text,
                                 const std::string& id_column,
                                 const WorldOptions& options,
                                 const DecodingFunction& dec) {
  KANON_ASSIGN_OR_RETURN(LoadedTable loaded,
                         Load(text, ValueKind::kSpecific, dec));
  std::optional<size_t> column = loaded.table.schema().IndexOf(id_column);
  if (!column.has_value()) {
    return absl::InvalidArgumentError(
        absl::StrCat("id column '", id_column, "' is not in the header"));
  }
  if (!options.allow_duplicate_individual_rows) {
    std::map<std::string_view, int> first_line;
    for (size_t r = 0; r < loaded.table.size(); ++r) {
      const Value& id = loaded.table.row(r)[*column];
      auto [it, inserted] = first_line.emplace(id, loaded.lines[r]);
      if (!inserted) {
        return LineError(loaded.lines[r],
                         absl::StrCat("duplicate individual id '", id,
                                      "' (first seen on line ", it->second,
                                      ")"));
      }
    }
  }
  return World::Create(std::move(loaded.table), id_column, options);
}

absl::StatusOr<Table> IngestTable(const std::string& path, ValueKind kind,
                                  const DecodingFunction& dec) {
  KANON_ASSIGN_OR_RETURN(std::string text, ReadFile(path));
  absl::StatusOr<Table> table = ParseTable(text, kind, dec);
  if (!table.ok()) return WithPath(path, table.status());
  return table;
}

absl::StatusOr<World> IngestWorld(const std::string& path,
                                  const std::string& id_column,
                                  const WorldOptions& options,
                                  const DecodingFunction& dec) {
  KANON_ASSIGN_OR_RETURN(std::string text, ReadFile(path));
  absl::StatusOr<World> world = ParseWorld(text, id_column, options, dec);
  if (!world.ok()) return WithPath(path, world.status());
  return world;
}

std::string FormatTable(const Table& table) {
  std::string out = FormatCsvRow(table.schema().names());
  out.push_back('\n');
  for (const Row& row : table.rows()) {
    absl::StrAppend(&out, FormatCsvRow(row), "\n");
  }
  return out;
}

absl::StatusOr<std::string> ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

absl::Status WriteFile(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    return absl::PermissionDeniedError(
        absl::StrCat("cannot write ", path));
  }
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) return absl::DataLossError(absl::StrCat("short write to ", path));
  return absl::OkStatus();
}

}  // namespace kanon::cli
