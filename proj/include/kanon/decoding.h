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

// The publicly known decoding function: it maps a general value to the
// non-empty set of specific values it may stand for. A literal without a rule
// is specific and decodes to itself.
//
// Rules are attached to an attribute. Besides explicit rules, two pattern
// forms are supported and expanded once, at build time, against the declared
// specific domain of the attribute:
//
//   "p*"       every domain value starting with p
//   "[lo-hi]"  every domain value whose integer reading lies in [lo, hi]
//
// Decoding is one step: the values a rule decodes to must themselves be
// specific.

#ifndef KANON_DECODING_H_
#define KANON_DECODING_H_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "kanon/relation.h"

namespace kanon {

enum class RuleKind { kExplicit, kPrefix, kInterval };

struct DecodingRule {
  std::string attribute;
  Value general;
  RuleKind kind = RuleKind::kExplicit;
  // Sorted, duplicate-free, non-empty. For pattern rules this is the
  // expansion against the attribute's domain.
  std::vector<Value> decoded;
};

class DecodingFunction {
 public:
  class Builder;

  // The identity decoding: every value is specific.
  DecodingFunction() = default;
  static const DecodingFunction& Identity();

  // Dec(v) for a value of `attribute`; sorted and never empty.
  std::vector<Value> Decode(std::string_view attribute, const Value& v) const;
  size_t DecodeSize(std::string_view attribute, const Value& v) const;
  // specific ∈ Dec(general)
  bool Covers(std::string_view attribute, const Value& general,
              const Value& specific) const;
  // True when Dec(v) != {v}.
  bool IsGeneral(std::string_view attribute, const Value& v) const;

  const DecodingRule* FindRule(std::string_view attribute,
                               const Value& v) const;

  // Declared specific domain, or nullptr.
  const std::vector<Value>* Domain(std::string_view attribute) const;
  const std::map<std::string, std::vector<Value>, std::less<>>& domains()
      const {
    return domains_;
  }

  // All rules ordered by (attribute, general literal).
  std::vector<DecodingRule> rules() const;

 private:
  using RuleMap = std::map<Value, DecodingRule, std::less<>>;

  std::map<std::string, RuleMap, std::less<>> rules_;
  std::map<std::string, std::vector<Value>, std::less<>> domains_;
};

// Collects domain declarations and rules, then validates them as a whole.
// `line` (when > 0) is quoted in error messages.
class DecodingFunction::Builder {
 public:
  absl::Status DeclareDomain(std::string attribute, std::vector<Value> values,
                             int line = 0);
  absl::Status AddExplicitRule(std::string attribute, Value general,
                               std::vector<Value> decoded, int line = 0);
  // `literal` must end in '*'.
  absl::Status AddPrefixRule(std::string attribute, Value literal,
                             int line = 0);
  // `literal` must read "[lo-hi]" with integers lo <= hi.
  absl::Status AddIntervalRule(std::string attribute, Value literal,
                               int line = 0);

  absl::StatusOr<DecodingFunction> Build() &&;

 private:
  struct PendingRule {
    DecodingRule rule;
    int line = 0;
  };
  struct PendingDomain {
    std::vector<Value> values;
    int line = 0;
  };

  absl::Status AddPending(DecodingRule rule, int line);

  std::map<std::string, PendingDomain, std::less<>> domains_;
  std::map<std::string, std::map<Value, PendingRule, std::less<>>,
           std::less<>>
      rules_;
};

// Parses the integer reading of a token; the whole token must be an integer.
std::optional<int64_t> IntegerReading(std::string_view token);

// Number of tuples in Dec(t); saturates at UINT64_MAX.
uint64_t DecodedTupleCount(const DecodingFunction& dec, const Tuple& t);

// Dec(t) = Dec(t[A_1]) x ... x Dec(t[A_n]) in lexicographic order. Refuses
// with ResourceExhausted when the product exceeds `max_tuples`.
absl::StatusOr<std::vector<Tuple>> DecodeTuple(
    const DecodingFunction& dec, const Tuple& t,
    uint64_t max_tuples = uint64_t{1} << 20);

// Calls `visit` for each member of Dec(t) without materializing the set.
// Enumeration stops early when `visit` returns false.
void ForEachDecoding(const DecodingFunction& dec, const Tuple& t,
                     const std::function<bool(const Tuple&)>& visit);

// specific ∈ Dec(general); both tuples must share a schema.
bool TupleInDecoding(const DecodingFunction& dec, const Tuple& general,
                     const Tuple& specific);

// True iff row i of `specific` is in Dec(row i of `general`) for every i.
absl::StatusOr<bool> TableInDecoding(const DecodingFunction& dec,
                                     const Table& general,
                                     const Table& specific);

// Per-attribute substitution specific -> general. Every pair (v -> g)
// satisfies v ∈ Dec(g) under the decoding function it was validated against.
class EncodingMap {
 public:
  using Mapping = std::map<std::string, std::map<Value, Value>, std::less<>>;

  EncodingMap() = default;
  static absl::StatusOr<EncodingMap> Create(Mapping mapping,
                                            const DecodingFunction& dec);

  bool empty() const { return mapping_.empty(); }
  bool HasAttribute(std::string_view attribute) const {
    return mapping_.find(attribute) != mapping_.end();
  }
  const Value* Find(std::string_view attribute, const Value& v) const;
  const Mapping& mapping() const { return mapping_; }

 private:
  explicit EncodingMap(Mapping mapping) : mapping_(std::move(mapping)) {}

  Mapping mapping_;
};

enum class UnmappedValues { kReject, kKeep };

// Attributes absent from `enc` pass through unchanged. A value of a mapped
// attribute that has no entry is an error unless `unmapped` is kKeep.
absl::StatusOr<Table> ApplyEncoding(
    const Table& table, const EncodingMap& enc,
    UnmappedValues unmapped = UnmappedValues::kReject);

}  // namespace kanon

#endif  // KANON_DECODING_H_
