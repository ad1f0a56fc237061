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

#ifndef LTRANSFER_ERRORS_H_
#define LTRANSFER_ERRORS_H_

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ltransfer {

// A document or instance broke one or more model invariants. Carries every
// violation found, not just the first.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<std::string> problems);

  const std::vector<std::string>& problems() const { return problems_; }

 private:
  std::vector<std::string> problems_;
};

// A structured document could not be read (bad JSON, missing field, wrong
// type).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exhaustive routine was asked to run beyond its configured size limit.
class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal invariant failed. Indicates a bug, never bad input.
class DefectError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ltransfer

#endif  // LTRANSFER_ERRORS_H_
