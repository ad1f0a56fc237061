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

#ifndef LTRANSFER_INSTANCE_H_
#define LTRANSFER_INSTANCE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace ltransfer {

// Unvalidated instance data as read from a document. Ids are strings; the
// acceptable list may name deficit schools or, in the extended model, surplus
// schools other than the teacher's own.
struct RawInstance {
  struct Surplus {
    std::string id;
    std::int64_t alpha = 0;

    bool operator==(const Surplus&) const = default;
  };
  struct Deficit {
    std::string id;
    std::int64_t beta = 0;

    bool operator==(const Deficit&) const = default;
  };
  struct Teacher {
    std::string id;
    std::string origin;
    std::vector<std::string> acceptable;

    bool operator==(const Teacher&) const = default;
  };
  std::vector<Surplus> surplus_schools;
  std::vector<Deficit> deficit_schools;
  std::vector<Teacher> teachers;

  bool operator==(const RawInstance&) const = default;
};

struct SurplusSchool {
  std::string id;
  std::int64_t alpha;

  bool operator==(const SurplusSchool&) const = default;
};

struct DeficitSchool {
  std::string id;
  std::int64_t beta;

  bool operator==(const DeficitSchool&) const = default;
};

struct Teacher {
  std::string id;
  int origin;                           // surplus-school index
  std::vector<int> acceptable_deficit;  // deficit-school indices, ascending
  std::vector<int> acceptable_surplus;  // surplus-school indices, ascending

  bool operator==(const Teacher&) const = default;
};

// Validated teacher-transfer instance with ids interned to dense indices.
// Indices follow document order. Immutable once built.
class Instance {
 public:
  // Checks every model invariant and collects all violations. Throws
  // ValidationError listing them.
  static Instance Validate(const RawInstance& raw);

  const std::vector<SurplusSchool>& surplus_schools() const { return surplus_; }
  const std::vector<DeficitSchool>& deficit_schools() const { return deficit_; }
  const std::vector<Teacher>& teachers() const { return teachers_; }

  int num_surplus() const { return static_cast<int>(surplus_.size()); }
  int num_deficit() const { return static_cast<int>(deficit_.size()); }
  int num_teachers() const { return static_cast<int>(teachers_.size()); }

  std::optional<int> FindTeacher(const std::string& id) const;
  std::optional<int> FindSurplus(const std::string& id) const;
  std::optional<int> FindDeficit(const std::string& id) const;

  // Deficits β in document order.
  std::vector<std::int64_t> Betas() const;

  // True when some teacher lists a surplus school as acceptable.
  bool HasSurplusAcceptables() const;

  // The same instance with every surplus-school acceptable removed and
  // teachers left with nothing acceptable dropped.
  Instance RestrictToDeficitAcceptables() const;

  RawInstance ToRaw() const;

  bool operator==(const Instance&) const = default;

 private:
  std::vector<SurplusSchool> surplus_;
  std::vector<DeficitSchool> deficit_;
  std::vector<Teacher> teachers_;
  std::unordered_map<std::string, int> teacher_index_;
  std::unordered_map<std::string, int> surplus_index_;
  std::unordered_map<std::string, int> deficit_index_;
};

// Where a teacher ends up. kStay means the teacher remains at its origin.
struct Destination {
  enum class Kind { kStay, kDeficit, kSurplus };
  Kind kind = Kind::kStay;
  int index = -1;

  static Destination Stay() { return {}; }
  static Destination ToDeficit(int k) { return {Kind::kDeficit, k}; }
  static Destination ToSurplus(int j) { return {Kind::kSurplus, j}; }

  bool is_stay() const { return kind == Kind::kStay; }
  bool operator==(const Destination&) const = default;
};

// A total map teacher -> destination, indexed by teacher index.
struct Transfer {
  std::vector<Destination> assignment;

  static Transfer AllStay(const Instance& instance);

  int NumMoved() const;
  bool operator==(const Transfer&) const = default;
};

// Teacher IR, surplus IR, and no-overshoot at deficit schools. A move to a
// surplus school (extended model) counts as an arrival there: every surplus
// school must keep 0 <= departures - arrivals <= alpha. Throws
// std::invalid_argument when the transfer does not match the instance shape
// or names an unknown school.
bool IsFeasible(const Instance& instance, const Transfer& transfer);

// Human-readable reason for infeasibility, or nullopt when feasible.
std::optional<std::string> FeasibilityProblem(const Instance& instance,
                                              const Transfer& transfer);

// Remaining deficits β^σ in deficit-school order. Throws
// std::invalid_argument for an infeasible transfer.
std::vector<std::int64_t> PostTransferDeficits(const Instance& instance,
                                               const Transfer& transfer);

}  // namespace ltransfer

#endif  // LTRANSFER_INSTANCE_H_
