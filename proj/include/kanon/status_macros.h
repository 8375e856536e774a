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

#ifndef KANON_STATUS_MACROS_H_
#define KANON_STATUS_MACROS_H_

#include "absl/status/status.h"
#include "absl/status/statusor.h"

#define KANON_RETURN_IF_ERROR(expr)               \
  do {                                            \
    const ::absl::Status kanon_status_ = (expr);  \
    if (!kanon_status_.ok()) return kanon_status_; \
  } while (0)

#define KANON_STATUS_CONCAT_INNER_(a, b) a##b
#define KANON_STATUS_CONCAT_(a, b) KANON_STATUS_CONCAT_INNER_(a, b)

#define KANON_ASSIGN_OR_RETURN_IMPL_(statusor, lhs, rexpr) \
  auto statusor = (rexpr);                                 \
  if (!statusor.ok()) return statusor.status();            \
  lhs = std::move(statusor).value()

// Evaluates `rexpr` (an absl::StatusOr<T>) and either assigns the value to
// `lhs` or returns the error status from the enclosing function.
#define KANON_ASSIGN_OR_RETURN(lhs, rexpr) \
  KANON_ASSIGN_OR_RETURN_IMPL_(            \
      KANON_STATUS_CONCAT_(kanon_statusor_, __LINE__), lhs, rexpr)

#endif  // KANON_STATUS_MACROS_H_
