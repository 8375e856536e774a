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

#include "kanon/decoding.h"

#include <algorithm>
#include <charconv>
#include <limits>
#include <regex>

#include "absl/strings/match.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "kanon/status_macros.h"

namespace kanon {
namespace {

std::string AtLine(int line) {
  return line > 0 ? absl::StrCat("line ", line, ": ") : std::string();
}

void SortUnique(std::vector<Value>& values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
}

struct Interval {
  int64_t lo;
  int64_t hi;
};

std::optional<Interval> ParseInterval(std::string_view literal) {
  static const std::regex kInterval(R"(^\[\s*(-?\d+)\s*-\s*(-?\d+)\s*\]$)");
  std::match_results<std::string_view::const_iterator> m;
  if (!std::regex_match(literal.begin(), literal.end(), m, kInterval)) {
    return std::nullopt;
  }
  std::optional<int64_t> lo = IntegerReading(m[1].str());
  std::optional<int64_t> hi = IntegerReading(m[2].str());
  if (!lo.has_value() || !hi.has_value() || *lo > *hi) return std::nullopt;
  return Interval{*lo, *hi};
}

}  // namespace

std::optional<int64_t> IntegerReading(std::string_view token) {
  int64_t out = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last || token.empty()) return std::nullopt;
  return out;
}

const DecodingFunction& DecodingFunction::Identity() {
  static const DecodingFunction* const kIdentity = new DecodingFunction();
  return *kIdentity;
}

const DecodingRule* DecodingFunction::FindRule(std::string_view attribute,
                                               const Value& v) const {
  auto attr_it = rules_.find(attribute);
  if (attr_it == rules_.end()) return nullptr;
  auto it = attr_it->second.find(v);
  return it == attr_it->second.end() ? nullptr : &it->second;
}

std::vector<Value> DecodingFunction::Decode(std::string_view attribute,
                                            const Value& v) const {
  const DecodingRule* rule = FindRule(attribute, v);
  if (rule == nullptr) return {v};
  return rule->decoded;
}

size_t DecodingFunction::DecodeSize(std::string_view attribute,
                                    const Value& v) const {
  const DecodingRule* rule = FindRule(attribute, v);
  return rule == nullptr ? 1 : rule->decoded.size();
}

bool DecodingFunction::Covers(std::string_view attribute, const Value& general,
                              const Value& specific) const {
  const DecodingRule* rule = FindRule(attribute, general);
  if (rule == nullptr) return general == specific;
  return std::binary_search(rule->decoded.begin(), rule->decoded.end(),
                            specific);
}

bool DecodingFunction::IsGeneral(std::string_view attribute,
                                 const Value& v) const {
  const DecodingRule* rule = FindRule(attribute, v);
  return rule != nullptr &&
         !(rule->decoded.size() == 1 && rule->decoded.front() == v);
}

const std::vector<Value>* DecodingFunction::Domain(
    std::string_view attribute) const {
  auto it = domains_.find(attribute);
  return it == domains_.end() ? nullptr : &it->second;
}

std::vector<DecodingRule> DecodingFunction::rules() const {
  std::vector<DecodingRule> out;
  for (const auto& [attribute, by_general] : rules_) {
    for (const auto& [general, rule] : by_general) out.push_back(rule);
  }
  return out;
}

absl::Status DecodingFunction::Builder::DeclareDomain(
    std::string attribute, std::vector<Value> values, int line) {
  if (attribute.empty()) {
    return absl::InvalidArgumentError(
        absl::StrCat(AtLine(line), "domain needs an attribute name"));
  }
  if (values.empty()) {
    return absl::InvalidArgumentError(absl::StrCat(
        AtLine(line), "domain of '", attribute, "' lists no values"));
  }
  if (domains_.contains(attribute)) {
    return absl::InvalidArgumentError(absl::StrCat(
        AtLine(line), "domain of '", attribute, "' declared twice"));
  }
  SortUnique(values);
  domains_[std::move(attribute)] = PendingDomain{std::move(values), line};
  return absl::OkStatus();
}

absl::Status DecodingFunction::Builder::AddPending(DecodingRule rule,
                                                   int line) {
  if (rule.attribute.empty() || rule.general.empty()) {
    return absl::InvalidArgumentError(
        absl::StrCat(AtLine(line), "rule needs an attribute and a literal"));
  }
  auto& by_general = rules_[rule.attribute];
  auto it = by_general.find(rule.general);
  if (it != by_general.end()) {
    return absl::InvalidArgumentError(absl::StrCat(
        AtLine(line), "duplicate rule for '", rule.general, "' on attribute '",
        rule.attribute, "'", it->second.line > 0 ? " (first at " : "",
        it->second.line > 0 ? absl::StrCat("line ", it->second.line, ")")
                            : ""));
  }
  Value general = rule.general;
  by_general.emplace(std::move(general), PendingRule{std::move(rule), line});
  return absl::OkStatus();
}

absl::Status DecodingFunction::Builder::AddExplicitRule(
    std::string attribute, Value general, std::vector<Value> decoded,
    int line) {
  SortUnique(decoded);
  if (decoded.empty() ||
      std::any_of(decoded.begin(), decoded.end(),
                  [](const Value& v) { return v.empty(); })) {
    return absl::InvalidArgumentError(absl::StrCat(
        AtLine(line), "rule for '", general, "' must decode to a non-empty "
        "set of non-empty values"));
  }
  return AddPending(DecodingRule{std::move(attribute), std::move(general),
                                 RuleKind::kExplicit, std::move(decoded)},
                    line);
}

absl::Status DecodingFunction::Builder::AddPrefixRule(std::string attribute,
                                                      Value literal, int line) {
  if (!absl::EndsWith(literal, "*")) {
    return absl::InvalidArgumentError(absl::StrCat(
        AtLine(line), "prefix rule '", literal, "' must end with '*'"));
  }
  return AddPending(
      DecodingRule{std::move(attribute), std::move(literal), RuleKind::kPrefix,
                   {}},
      line);
}

absl::Status DecodingFunction::Builder::AddIntervalRule(std::string attribute,
                                                        Value literal,
                                                        int line) {
  if (!ParseInterval(literal).has_value()) {
    return absl::InvalidArgumentError(
        absl::StrCat(AtLine(line), "interval rule '", literal,
                     "' must read [lo-hi] with integers lo <= hi"));
  }
  return AddPending(DecodingRule{std::move(attribute), std::move(literal),
                                 RuleKind::kInterval, {}},
                    line);
}

absl::StatusOr<DecodingFunction> DecodingFunction::Builder::Build() && {
  DecodingFunction dec;
  for (auto& [attribute, domain] : domains_) {
    dec.domains_[attribute] = domain.values;
  }

  // Expand patterns against the declared domains.
  for (auto& [attribute, by_general] : rules_) {
    for (auto& [general, pending] : by_general) {
      DecodingRule& rule = pending.rule;
      if (rule.kind == RuleKind::kExplicit) continue;
      const std::vector<Value>* domain = dec.Domain(attribute);
      if (domain == nullptr) {
        return absl::FailedPreconditionError(absl::StrCat(
            AtLine(pending.line), "pattern rule '", general,
            "' needs a declared domain for attribute '", attribute, "'"));
      }
      if (rule.kind == RuleKind::kPrefix) {
        const absl::string_view prefix(general.data(), general.size() - 1);
        for (const Value& v : *domain) {
          if (absl::StartsWith(v, prefix)) rule.decoded.push_back(v);
        }
      } else {
        Interval interval = *ParseInterval(general);
        for (const Value& v : *domain) {
          std::optional<int64_t> n = IntegerReading(v);
          if (n.has_value() && *n >= interval.lo && *n <= interval.hi) {
            rule.decoded.push_back(v);
          }
        }
      }
      if (rule.decoded.empty()) {
        return absl::FailedPreconditionError(absl::StrCat(
            AtLine(pending.line), "pattern rule '", general,
            "' matches no value in the domain of '", attribute, "'"));
      }
    }
  }

  for (auto& [attribute, by_general] : rules_) {
    for (auto& [general, pending] : by_general) {
      dec.rules_[attribute].emplace(general, pending.rule);
    }
  }

  // One-step decoding: everything a rule decodes to, and every declared
  // domain value, must decode to itself.
  for (const auto& [attribute, by_general] : dec.rules_) {
    for (const auto& [general, rule] : by_general) {
      const int line = rules_[attribute][general].line;
      for (const Value& member : rule.decoded) {
        if (member == general && rule.decoded.size() > 1) {
          return absl::FailedPreconditionError(absl::StrCat(
              AtLine(line), "'", general,
              "' decodes to a set containing itself and other values"));
        }
        if (member != general && dec.IsGeneral(attribute, member)) {
          return absl::FailedPreconditionError(absl::StrCat(
              AtLine(line), "rule for '", general, "' decodes to '", member,
              "', which is itself general"));
        }
      }
    }
  }
  for (const auto& [attribute, values] : dec.domains_) {
    for (const Value& v : values) {
      if (dec.IsGeneral(attribute, v)) {
        return absl::FailedPreconditionError(absl::StrCat(
            AtLine(domains_[attribute].line), "domain of '", attribute,
            "' lists '", v, "', which has a non-trivial rule"));
      }
    }
  }
  return dec;
}

uint64_t DecodedTupleCount(const DecodingFunction& dec, const Tuple& t) {
  uint64_t count = 1;
  for (size_t i = 0; i < t.size(); ++i) {
    const uint64_t size = dec.DecodeSize(t.schema().name(i), t.value(i));
    if (count > std::numeric_limits<uint64_t>::max() / size) {
      return std::numeric_limits<uint64_t>::max();
    }
    count *= size;
  }
  return count;
}

void ForEachDecoding(const DecodingFunction& dec, const Tuple& t,
                     const std::function<bool(const Tuple&)>& visit) {
  std::vector<std::vector<Value>> choices;
  choices.reserve(t.size());
  for (size_t i = 0; i < t.size(); ++i) {
    choices.push_back(dec.Decode(t.schema().name(i), t.value(i)));
  }
  std::vector<size_t> odometer(t.size(), 0);
  Row values(t.size());
  while (true) {
    for (size_t i = 0; i < t.size(); ++i) values[i] = choices[i][odometer[i]];
    if (!visit(*Tuple::Create(t.schema(), values))) return;
    // Advance the last position first, giving lexicographic order.
    size_t pos = t.size();
    while (pos > 0) {
      --pos;
      if (++odometer[pos] < choices[pos].size()) break;
      odometer[pos] = 0;
      if (pos == 0) return;
    }
    if (t.size() == 0) return;
  }
}

absl::StatusOr<std::vector<Tuple>> DecodeTuple(const DecodingFunction& dec,
                                               const Tuple& t,
                                               uint64_t max_tuples) {
  const uint64_t count = DecodedTupleCount(dec, t);
  if (count > max_tuples) {
    return absl::ResourceExhaustedError(
        absl::StrCat("decoding of ", t.ToString(), " has ", count,
                     " tuples, above the limit of ", max_tuples));
  }
  std::vector<Tuple> out;
  out.reserve(count);
  ForEachDecoding(dec, t, [&](const Tuple& d) {
    out.push_back(d);
    return true;
  });
  return out;
}

bool TupleInDecoding(const DecodingFunction& dec, const Tuple& general,
                     const Tuple& specific) {
  if (!(general.schema() == specific.schema())) return false;
  for (size_t i = 0; i < general.size(); ++i) {
    if (!dec.Covers(general.schema().name(i), general.value(i),
                    specific.value(i))) {
      return false;
    }
  }
  return true;
}

absl::StatusOr<bool> TableInDecoding(const DecodingFunction& dec,
                                     const Table& general,
                                     const Table& specific) {
  if (!(general.schema() == specific.schema())) {
    return absl::InvalidArgumentError(
        "tables compared for decoding must share a schema");
  }
  if (general.size() != specific.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat("tables compared for decoding differ in size: ",
                     general.size(), " vs ", specific.size()));
  }
  for (size_t i = 0; i < general.size(); ++i) {
    if (!TupleInDecoding(dec, general.tuple(i), specific.tuple(i))) {
      return false;
    }
  }
  return true;
}

absl::StatusOr<EncodingMap> EncodingMap::Create(Mapping mapping,
                                                const DecodingFunction& dec) {
  for (const auto& [attribute, pairs] : mapping) {
    for (const auto& [specific, general] : pairs) {
      if (!dec.Covers(attribute, general, specific)) {
        return absl::InvalidArgumentError(absl::StrCat(
            "encoding ", attribute, ": '", specific, "' -> '", general,
            "' is not backed by the decoding function"));
      }
    }
  }
  return EncodingMap(std::move(mapping));
}

const Value* EncodingMap::Find(std::string_view attribute,
                               const Value& v) const {
  auto attr_it = mapping_.find(attribute);
  if (attr_it == mapping_.end()) return nullptr;
  auto it = attr_it->second.find(v);
  return it == attr_it->second.end() ? nullptr : &it->second;
}

absl::StatusOr<Table> ApplyEncoding(const Table& table, const EncodingMap& enc,
                                    UnmappedValues unmapped) {
  std::vector<Row> rows = table.rows();
  for (size_t r = 0; r < rows.size(); ++r) {
    for (size_t c = 0; c < table.schema().size(); ++c) {
      const std::string& attribute = table.schema().name(c);
      if (!enc.HasAttribute(attribute)) continue;
      if (const Value* general = enc.Find(attribute, rows[r][c])) {
        rows[r][c] = *general;
      } else if (unmapped == UnmappedValues::kReject) {
        return absl::InvalidArgumentError(
            absl::StrCat("row ", r, ": no encoding for ", attribute, "='",
                         rows[r][c], "'"));
      }
    }
  }
  return Table::Create(table.schema(), std::move(rows));
}

}  // namespace kanon
