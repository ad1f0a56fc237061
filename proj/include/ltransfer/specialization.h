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

#ifndef LTRANSFER_SPECIALIZATION_H_
#define LTRANSFER_SPECIALIZATION_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ltransfer/network.h"

namespace ltransfer {

// Instance where teachers are qualified for one or more subjects and schools
// carry per-subject surpluses and deficits.
struct RawTypedInstance {
  struct School {
    std::string id;
    std::string kind;  // "surplus", "deficit" or "mixed"
    std::map<std::string, std::int64_t> surplus;
    std::map<std::string, std::int64_t> deficit;

    bool operator==(const School&) const = default;
  };
  struct Teacher {
    std::string id;
    std::string school;
    std::vector<std::string> qualified;
    std::string teaches;
    std::vector<std::string> acceptable;

    bool operator==(const Teacher&) const = default;
  };
  std::vector<std::string> subjects;
  std::vector<School> schools;
  std::vector<Teacher> teachers;

  bool operator==(const RawTypedInstance&) const = default;
};

enum class SchoolKind { kPureSurplus, kPureDeficit, kMixed };

struct TypedSchool {
  std::string id;
  SchoolKind kind;
  std::vector<std::int64_t> surplus;  // per subject, 0 where none
  std::vector<std::int64_t> deficit;  // per subject, 0 where none
};

struct TypedTeacher {
  std::string id;
  int school;
  std::vector<bool> qualified;  // per subject
  int teaches;
  std::vector<int> acceptable;  // school indices, ascending
};

class TypedInstance {
 public:
  // Throws ValidationError with every problem found.
  static TypedInstance Validate(const RawTypedInstance& raw);

  const std::vector<std::string>& subjects() const { return subjects_; }
  const std::vector<TypedSchool>& schools() const { return schools_; }
  const std::vector<TypedTeacher>& teachers() const { return teachers_; }
  int num_subjects() const { return static_cast<int>(subjects_.size()); }
  int num_teachers() const { return static_cast<int>(teachers_.size()); }

  // Teachers at pure-surplus schools, and teachers at mixed schools qualified
  // only in a subject the school has in surplus.
  bool IsTransferable(int teacher) const;

  // (school, subject) pairs that act as sinks, in school then subject order.
  std::vector<std::pair<int, int>> SinkSlots() const;
  std::string SlotLabel(int school, int subject) const;

  RawTypedInstance ToRaw() const;

 private:
  std::vector<std::string> subjects_;
  std::vector<TypedSchool> schools_;
  std::vector<TypedTeacher> teachers_;
};

// Network G'': per-(school, subject) nodes, sinks at deficit subject slots of
// pure-deficit and mixed schools, and one node per transferable teacher with
// at least one usable edge. Teacher refs are teacher indices.
FlowNetwork BuildSpecializationNetwork(const TypedInstance& instance);

// Teacher -> sink index (into SinkSlots()) or nullopt for staying.
struct TypedTransfer {
  std::vector<std::optional<int>> assignment;

  bool operator==(const TypedTransfer&) const = default;
};

TypedTransfer FlowToTypedTransfer(const FlowNetwork& network,
                                  const TypedInstance& instance,
                                  const Flow& flow);

}  // namespace ltransfer

#endif  // LTRANSFER_SPECIALIZATION_H_
