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

#include "kanon/cli/run.h"

#include <chrono>
#include <filesystem>
#include <system_error>
#include <utility>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "kanon/anonymity.h"
#include "kanon/cli/report.h"
#include "kanon/cli/rules_io.h"
#include "kanon/cli/table_io.h"
#include "kanon/fixtures.h"
#include "kanon/quasi_id.h"
#include "kanon/status_macros.h"
#include "kanon/world.h"

namespace kanon::cli {
namespace {

using Json = nlohmann::ordered_json;

// Attribute count above which exhaustive QI enumeration gets a warning.
constexpr size_t kLargeQiSearch = 20;

struct Outcome {
  Report report;
  int exit_code = kExitPass;
};

int VerdictExit(bool verdict) { return verdict ? kExitPass : kExitFail; }

absl::StatusOr<DecodingFunction> LoadRules(const std::string& path) {
  if (path.empty()) return DecodingFunction::Identity();
  KANON_ASSIGN_OR_RETURN(std::string text, ReadFile(path));
  absl::StatusOr<DecodingFunction> dec = ParseDecodingRules(text);
  if (!dec.ok()) {
    return absl::Status(dec.status().code(),
                        absl::StrCat(path, ": ", dec.status().message()));
  }
  return dec;
}

absl::StatusOr<World> LoadWorld(const RunConfig& c,
                                const DecodingFunction& dec) {
  if (c.world_path.empty()) return absl::InvalidArgumentError("--world is required");
  WorldOptions options;
  options.allow_duplicate_individual_rows = c.allow_duplicate_individual_rows;
  return IngestWorld(c.world_path, c.id_column, options, dec);
}

absl::StatusOr<Table> LoadTable(const RunConfig& c,
                                const DecodingFunction& dec) {
  if (c.table_path.empty()) return absl::InvalidArgumentError("--table is required");
  return IngestTable(c.table_path, ValueKind::kMixed, dec);
}

absl::StatusOr<int64_t> RequireK(const RunConfig& c, int64_t min) {
  if (!c.k.has_value()) return absl::InvalidArgumentError("--k is required");
  if (*c.k < min) {
    return absl::InvalidArgumentError(
        absl::StrCat("--k must be at least ", min, ", got ", *c.k));
  }
  return *c.k;
}

// Narrows `base` to the --public override, which may only shrink it.
absl::StatusOr<AttributeSet> Narrow(const AttributeSet& base,
                                    const RunConfig& c, Report& report) {
  if (!c.public_override.has_value()) return base;
  const AttributeSet& wanted = *c.public_override;
  if (wanted.empty()) {
    return absl::InvalidArgumentError("--public needs at least one attribute");
  }
  if (!wanted.IsSubsetOf(base)) {
    return absl::InvalidArgumentError(
        absl::StrCat("--public ", wanted.ToString(),
                     " may only narrow the public attributes ",
                     base.ToString()));
  }
  if (wanted != base) {
    report.warnings.push_back(absl::StrCat(
        "public attributes narrowed from ", base.ToString(), " to ",
        wanted.ToString(), "; a verdict over a proper subset says nothing "
        "about the table over the full public attribute set"));
  }
  return wanted;
}

absl::StatusOr<Outcome> RunAudit(const RunConfig& c) {
  KANON_ASSIGN_OR_RETURN(int64_t k, RequireK(c, 2));
  KANON_ASSIGN_OR_RETURN(DecodingFunction dec, LoadRules(c.rules_path));
  KANON_ASSIGN_OR_RETURN(World world, LoadWorld(c, dec));
  KANON_ASSIGN_OR_RETURN(Table table, LoadTable(c, dec));
  KANON_ASSIGN_OR_RETURN(
      AuditContext ctx,
      AuditContext::Create(std::move(table), std::move(world), std::move(dec)));

  Report scratch;
  KANON_ASSIGN_OR_RETURN(AttributeSet pattrs, Narrow(ctx.pattrs(), c, scratch));
  if (pattrs != ctx.pattrs()) {
    KANON_ASSIGN_OR_RETURN(ctx, ctx.RestrictedTo(pattrs));
  }
  KANON_ASSIGN_OR_RETURN(AnonymityReport result, IsKAnonymous(ctx, k));
  Outcome outcome{FromAnonymity(result), VerdictExit(result.verdict)};
  outcome.report.warnings = std::move(scratch.warnings);
  if (result.degenerate) {
    outcome.report.warnings.push_back("empty table; verdict is vacuous");
  }
  return outcome;
}

absl::StatusOr<Outcome> RunConservative(const RunConfig& c) {
  KANON_ASSIGN_OR_RETURN(int64_t k, RequireK(c, 2));
  KANON_ASSIGN_OR_RETURN(DecodingFunction dec, LoadRules(c.rules_path));
  KANON_ASSIGN_OR_RETURN(Table table, LoadTable(c, dec));

  // Without a world header every table column is treated as public.
  AttributeSet base = table.attributes();
  if (!c.world_path.empty()) {
    KANON_ASSIGN_OR_RETURN(World world, LoadWorld(c, dec));
    base = PublicAttributes(world, table);
    if (base.empty()) {
      return absl::InvalidArgumentError(
          "table shares no public attribute with the world");
    }
  }
  Report scratch;
  KANON_ASSIGN_OR_RETURN(AttributeSet pattrs, Narrow(base, c, scratch));

  ConservativeOptions options;
  options.method = c.enumerate ? ChoiceWorldMethod::kEnumerate
                               : ChoiceWorldMethod::kMinimalCover;
  options.max_choice_vectors = c.max_choice_vectors;
  KANON_ASSIGN_OR_RETURN(
      ConservativeReport result,
      IsConservativelyKAnonymous(table, dec, pattrs, k, options));
  Outcome outcome{FromConservative(result), VerdictExit(result.verdict)};
  outcome.report.details["method"] =
      c.enumerate ? "enumerate" : "minimal-cover";
  outcome.report.warnings = std::move(scratch.warnings);
  if (result.degenerate) {
    outcome.report.warnings.push_back("empty table; verdict is vacuous");
  }
  return outcome;
}

absl::StatusOr<Outcome> RunConsistency(const RunConfig& c) {
  KANON_ASSIGN_OR_RETURN(DecodingFunction dec, LoadRules(c.rules_path));
  KANON_ASSIGN_OR_RETURN(World world, LoadWorld(c, dec));
  KANON_ASSIGN_OR_RETURN(Table table, LoadTable(c, dec));

  Report report;
  report.command = "consistency";
  const AttributeSet base = PublicAttributes(world, table);
  if (base.empty()) {
    return absl::InvalidArgumentError(
        "table shares no public attribute with the world");
  }
  KANON_ASSIGN_OR_RETURN(AttributeSet pattrs, Narrow(base, c, report));
  KANON_ASSIGN_OR_RETURN(Table probed, Project(table, pattrs));

  KANON_ASSIGN_OR_RETURN(bool consistent, IsConsistent(world, probed, dec));
  KANON_ASSIGN_OR_RETURN(ConsistencyMatching matching,
                         IsIndividualizedConsistent(world, probed, dec));
  report.verdict = matching.complete;
  report.pattrs = matching.pattrs;
  report.details["consistent"] = consistent;
  report.details["individualized_consistent"] = matching.complete;
  report.details["matched"] = matching.matched;
  Json assignment = Json::array();
  for (const RowAssignment& a : matching.assignment) {
    Json entry;
    entry["row"] = a.row;
    entry["individual"] =
        a.individual.has_value() ? Json(*a.individual) : Json(nullptr);
    if (a.witness.has_value()) {
      Json witness = Json::object();
      for (size_t i = 0; i < a.witness->size(); ++i) {
        witness[a.witness->schema().name(i)] = a.witness->value(i);
      }
      entry["witness"] = std::move(witness);
    } else {
      entry["witness"] = nullptr;
    }
    assignment.push_back(std::move(entry));
  }
  report.details["assignment"] = std::move(assignment);
  for (size_t r = 0; r < matching.assignment.size(); ++r) {
    if (!matching.assignment[r].individual.has_value()) {
      report.witnesses.push_back(r);
    }
  }
  return Outcome{std::move(report), VerdictExit(matching.complete)};
}

Json LevelJson(const QiLevel& level, int64_t k) {
  Json j;
  j["attrs"] = level.attrs.names();
  j["level"] = level.level.has_value() ? Json(*level.level) : Json(nullptr);
  j["is_k_qi"] = level.level.has_value() && *level.level <= k;
  if (level.witness.has_value()) {
    Json w;
    w["tuple"] = level.witness->tuple.values();
    w["count"] = level.witness->count;
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

absl::StatusOr<Outcome> RunQi(const RunConfig& c) {
  RunConfig with_k = c;
  if (!with_k.k.has_value()) with_k.k = 1;
  KANON_ASSIGN_OR_RETURN(int64_t k, RequireK(with_k, 1));
  KANON_ASSIGN_OR_RETURN(DecodingFunction dec, LoadRules(c.rules_path));
  KANON_ASSIGN_OR_RETURN(World world, LoadWorld(c, dec));

  Report report;
  report.command = "qi";
  report.k = k;
  report.pattrs = world.attributes();
  if (!c.qi_sets.empty()) {
    Json levels = Json::array();
    for (const AttributeSet& attrs : c.qi_sets) {
      KANON_ASSIGN_OR_RETURN(QiLevel level, GetQiLevel(world, attrs));
      levels.push_back(LevelJson(level, k));
    }
    report.details["levels"] = std::move(levels);
  } else {
    if (!c.max_qi_size.has_value() &&
        world.attributes().size() > kLargeQiSearch) {
      report.warnings.push_back(absl::StrCat(
          "searching all subsets of ", world.attributes().size(),
          " attributes; consider --max-qi-size"));
    }
    KANON_ASSIGN_OR_RETURN(std::vector<AttributeSet> minimal,
                           MinimalKQis(world, k, c.max_qi_size));
    Json sets = Json::array();
    for (const AttributeSet& s : minimal) sets.push_back(s.names());
    report.details["minimal_k_qis"] = std::move(sets);
  }
  return Outcome{std::move(report), kExitPass};
}

absl::Status Emit(const std::filesystem::path& dir, const std::string& name,
                  const std::string& content, Json& files) {
  KANON_RETURN_IF_ERROR(WriteFile((dir / name).string(), content));
  files.push_back(name);
  return absl::OkStatus();
}

absl::StatusOr<Outcome> RunFixture(const RunConfig& c) {
  if (c.out_dir.empty()) return absl::InvalidArgumentError("--out is required");
  const std::filesystem::path dir(c.out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    return absl::PermissionDeniedError(
        absl::StrCat("cannot create ", c.out_dir, ": ", ec.message()));
  }

  Report report;
  report.command = "fixture";
  Json files = Json::array();
  std::string id_column = "ID";
  if (c.fixture == "figure1" || c.fixture == "figure2") {
    ExampleInstance ex = c.fixture == "figure1" ? BuildFigure1() : BuildFigure2();
    id_column = ex.world.id_attribute();
    KANON_RETURN_IF_ERROR(
        Emit(dir, "world.csv", FormatTable(ex.world.relation()), files));
    KANON_RETURN_IF_ERROR(Emit(dir, "table.csv", FormatTable(ex.table), files));
    KANON_RETURN_IF_ERROR(Emit(dir, "table_generalized.csv",
                               FormatTable(ex.generalized), files));
    KANON_RETURN_IF_ERROR(
        Emit(dir, "rules.txt", FormatDecodingRules(ex.dec), files));
  } else if (c.fixture == "theorem3") {
    const int64_t k = c.k.value_or(2);
    KANON_ASSIGN_OR_RETURN(Theorem3Instance inst,
                           BuildTheorem3(c.n, static_cast<int>(k)));
    id_column = inst.world.id_attribute();
    KANON_RETURN_IF_ERROR(
        Emit(dir, "world.csv", FormatTable(inst.world.relation()), files));
    KANON_RETURN_IF_ERROR(
        Emit(dir, "table.csv", FormatTable(inst.table), files));
    KANON_RETURN_IF_ERROR(
        Emit(dir, "rules.txt", FormatDecodingRules(inst.dec), files));
    report.k = k;
  } else if (c.fixture == "theorem5") {
    const int64_t k = c.k.value_or(2);
    const ExampleInstance fig1 = BuildFigure1();
    const AttributeSet pattrs{"FirstName"};
    std::optional<Tuple> pivot = FindGeneralPivot(fig1.dec, pattrs);
    if (!pivot.has_value()) {
      return absl::InternalError("no general value to pivot on");
    }
    KANON_ASSIGN_OR_RETURN(Theorem5Instance inst,
                           BuildTheorem5(fig1.dec, pattrs, *pivot, k));
    KANON_RETURN_IF_ERROR(
        Emit(dir, "table.csv", FormatTable(inst.table), files));
    KANON_RETURN_IF_ERROR(
        Emit(dir, "rules.txt", FormatDecodingRules(inst.dec), files));
    report.k = k;
    report.pattrs = inst.pattrs;
    report.details["pivot_row"] = inst.pivot_row;
  } else {
    return absl::InvalidArgumentError(absl::StrCat(
        "unknown fixture '", c.fixture,
        "'; expected figure1, figure2, theorem3 or theorem5"));
  }
  report.details["fixture"] = c.fixture;
  report.details["out_dir"] = c.out_dir;
  report.details["id_column"] = id_column;
  report.details["files"] = std::move(files);
  return Outcome{std::move(report), kExitPass};
}

absl::StatusOr<Outcome> Dispatch(const RunConfig& c) {
  switch (c.command) {
    case Command::kAudit:
      return RunAudit(c);
    case Command::kQi:
      return RunQi(c);
    case Command::kConsistency:
      return RunConsistency(c);
    case Command::kConservative:
      return RunConservative(c);
    case Command::kFixture:
      return RunFixture(c);
  }
  return absl::InternalError("unhandled command");
}

std::vector<std::string> SplitNames(const std::string& s) {
  std::vector<std::string> out;
  for (absl::string_view part : absl::StrSplit(s, ',', absl::SkipEmpty())) {
    out.emplace_back(part);
  }
  return out;
}

}  // namespace

int Execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  absl::StatusOr<Outcome> outcome = Dispatch(config);
  if (!outcome.ok()) {
    err << "error: " << outcome.status().message() << "\n";
    return absl::IsResourceExhausted(outcome.status()) ? kExitResource
                                                       : kExitUsage;
  }
  Report& report = outcome->report;
  report.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  for (const std::string& w : report.warnings) err << "warning: " << w << "\n";
  if (config.format == OutputFormat::kJson) {
    out << ToJson(report).dump(2) << "\n";
  } else {
    out << ToText(report);
  }
  return outcome->exit_code;
}

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Audit k-anonymity of a table against a relational world",
               "kanon"};
  app.require_subcommand(1);

  RunConfig config;
  int64_t k = 0;
  std::string format = "text";
  std::vector<std::string> public_attrs;
  std::vector<std::string> qi_sets;
  size_t max_qi_size = 0;

  std::vector<std::pair<CLI::App*, Command>> commands;
  auto add = [&](const char* name, const char* help, Command command) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"text", "json"}));
    commands.emplace_back(sub, command);
    return sub;
  };
  auto add_inputs = [&](CLI::App* sub, bool world, bool table) {
    if (world) {
      sub->add_option("--world", config.world_path, "World CSV");
      sub->add_option("--id-column", config.id_column,
                      "Identifier column of the world")
          ->capture_default_str();
      sub->add_flag("--allow-duplicate-individual-rows",
                    config.allow_duplicate_individual_rows,
                    "Accept several world rows per individual");
    }
    if (table) sub->add_option("--table", config.table_path, "Table CSV");
    sub->add_option("--rules", config.rules_path, "Decoding rules file");
  };

  CLI::App* audit = add("audit", "k-anonymity of a table against a world",
                        Command::kAudit);
  add_inputs(audit, true, true);
  audit->add_option("--k", k, "Anonymity parameter");
  audit->add_option("--public", public_attrs, "Narrowed public attributes")
      ->delimiter(',');

  CLI::App* qi = add("qi", "quasi-identifier levels of a world", Command::kQi);
  add_inputs(qi, true, false);
  qi->add_option("--k", k, "QI parameter (default 1)");
  qi->add_option("--attrs", qi_sets,
                 "Comma-separated attribute set; repeatable");
  qi->add_option("--max-qi-size", max_qi_size,
                 "Largest set size searched for minimal k-QIs");

  CLI::App* consistency =
      add("consistency", "consistency of a table with a world",
          Command::kConsistency);
  add_inputs(consistency, true, true);
  consistency->add_option("--public", public_attrs, "Narrowed public attributes")
      ->delimiter(',');

  CLI::App* conservative =
      add("conservative", "k-anonymity against every consistent world",
          Command::kConservative);
  add_inputs(conservative, true, true);
  conservative->add_option("--k", k, "Anonymity parameter");
  conservative->add_option("--public", public_attrs, "Public attributes")
      ->delimiter(',');
  conservative->add_flag("--enumerate", config.enumerate,
                         "Enumerate every choice vector");
  conservative
      ->add_option("--max-choice-vectors", config.max_choice_vectors,
                   "Refuse enumeration above this many choice vectors")
      ->capture_default_str();

  CLI::App* fixture = add("fixture", "write a reference fixture to files",
                          Command::kFixture);
  fixture->add_option("name", config.fixture,
                      "figure1 | figure2 | theorem3 | theorem5")
      ->required();
  fixture->add_option("--out", config.out_dir, "Output directory")->required();
  fixture->add_option("--n", config.n, "Attribute count for theorem3")
      ->capture_default_str();
  fixture->add_option("--k", k, "k for theorem3 and theorem5 (default 2)");

  try {
    std::vector<std::string> reversed(args.rbegin(),
                                      args.rend() - (args.empty() ? 0 : 1));
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  for (const auto& [sub, command] : commands) {
    if (!sub->parsed()) continue;
    config.command = command;
    auto given = [&](const char* name) {
      const CLI::Option* opt = sub->get_option_no_throw(name);
      return opt != nullptr && opt->count() > 0;
    };
    if (given("--k")) config.k = k;
    if (given("--public")) {
      config.public_override = AttributeSet(public_attrs);
    }
  }
  config.format = format == "json" ? OutputFormat::kJson : OutputFormat::kText;
  for (const std::string& s : qi_sets) {
    config.qi_sets.push_back(AttributeSet(SplitNames(s)));
  }
  if (qi->count("--max-qi-size") > 0) config.max_qi_size = max_qi_size;
  return Execute(config, out, err);
}

}  // namespace kanon::cli
