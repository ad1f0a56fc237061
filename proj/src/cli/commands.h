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

#ifndef LTRANSFER_CLI_COMMANDS_H_
#define LTRANSFER_CLI_COMMANDS_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "ltransfer/generator.h"

namespace ltransfer::cli {

// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kIoError = 1;
inline constexpr int kValidationError = 2;
inline constexpr int kCapExceeded = 3;
inline constexpr int kCheckFailed = 4;

struct SolveArgs {
  std::string instance_path;
  std::string variant = "base";
  std::string output_path;  // empty writes to stdout
  bool timings = true;
};

struct VerifyArgs {
  std::string instance_path;
  std::string variant = "base";
  std::string solution_path;  // empty runs the solver
};

struct AuditArgs {
  std::string instance_path;
  std::optional<int> sample;  // unset means every misreport
  std::uint64_t seed = 0;
  bool broken = false;  // swap in a profile-scrambled selector
  bool json = false;
};

struct ReportArgs {
  std::string solution_path;
  std::string csv_path;  // "-" writes the CSV to stdout
};

// Each command writes results to out and diagnostics to err, and returns an
// exit code. Exceptions never escape.
int Solve(const SolveArgs& args, std::ostream& out, std::ostream& err);
int Verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);
int AuditSp(const AuditArgs& args, std::ostream& out, std::ostream& err);
int Gen(const GeneratorOptions& options, const std::string& output_path,
        std::ostream& out, std::ostream& err);
int Report(const ReportArgs& args, std::ostream& out, std::ostream& err);

// Parses argv and dispatches.
int Main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace ltransfer::cli

#endif  // LTRANSFER_CLI_COMMANDS_H_
