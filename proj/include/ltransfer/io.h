// Copyright 2026 The ltransfer Authors
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

#ifndef LTRANSFER_IO_H_
#define LTRANSFER_IO_H_

#include <string>

#include "json.hpp"
#include "ltransfer/instance.h"
#include "ltransfer/mechanism.h"
#include "ltransfer/rounding.h"
#include "ltransfer/specialization.h"

// JSON documents. Objects serialize with sorted keys and arrays keep model
// order, so equal values always produce identical bytes.
namespace ltransfer::io {

using Json = nlohmann::json;

// Instance: {"surplus_schools": [{"id", "alpha"}], "deficit_schools":
// [{"id", "beta"}], "teachers": [{"id", "origin", "acceptable": [...]}]}.
Json ToJson(const RawInstance& raw);
Json ToJson(const Instance& instance);
// Throws ParseError on a structural problem.
RawInstance ParseRawInstance(const Json& doc);
// Parse, then Instance::Validate (ValidationError).
Instance ParseInstance(const Json& doc);

// Transfer: {"assignment": {"t1": "d2", "t2": "STAY", ...}}.
Json ToJson(const Instance& instance, const Transfer& transfer);
Transfer ParseTransfer(const Instance& instance, const Json& doc);

// Typed instance: {"subjects": [...], "schools": [{"id", "kind", "surplus":
// {subject: n}, "deficit": {subject: n}}], "teachers": [{"id", "school",
// "qualified": [...], "teaches", "acceptable": [...]}]}.
Json ToJson(const RawTypedInstance& raw);
RawTypedInstance ParseRawTypedInstance(const Json& doc);
TypedInstance ParseTypedInstance(const Json& doc);
bool IsTypedDocument(const Json& doc);

// Solution: variant, schools, beta, partition, h_star (exact strings),
// h_hat, max_flow, moved, transfer, timings_ms, and optionally instance.
Json ToJson(const Solution& solution, const std::string& instance_ref = "",
            bool with_timings = true);
Solution ParseSolution(const Json& doc);

Json ToJson(const AuditReport& report);

// Serialized form with a trailing newline.
std::string Dump(const Json& doc);
// Throws ParseError for unreadable files or malformed JSON.
Json ReadJsonFile(const std::string& path);

}  // namespace ltransfer::io

#endif  // LTRANSFER_IO_H_
